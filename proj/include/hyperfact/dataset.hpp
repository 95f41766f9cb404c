#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hyperfact/exact.hpp"

namespace hyperfact {

// One row per odd semiprime: the epsilon frame plus the conjecture flag,
// the raw material for downstream pattern analysis.
struct DatasetRow {
  std::uint64_t n = 0, p = 0, q = 0;  // p < q
  Int epsilon, k, sum_pq, phi, hyper_x, hyper_y, f1_at_eps;
  bool conjecture_holds = false;
};

// Rows for every odd semiprime in [from, to], ascending in n; deterministic
// for any worker count.
std::vector<DatasetRow> dataset_rows(std::uint64_t from, std::uint64_t to,
                                     unsigned workers = 1);

// Fixed column order:
// n,p,q,epsilon,k,sum_pq,phi,hyper_x,hyper_y,f1_at_eps,conjecture_holds
void write_dataset_csv(std::ostream& out, const std::vector<DatasetRow>& rows);
void write_dataset_json(std::ostream& out, const std::vector<DatasetRow>& rows);

// RFC 4180 quoting: wraps in quotes when the field contains a comma, quote,
// or newline, doubling embedded quotes.
std::string csv_field(const std::string& raw);

}  // namespace hyperfact
