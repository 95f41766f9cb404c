#include "hyperfact/dataset.hpp"

#include <ostream>
#include <string>

#include <json.hpp>

#include "hyperfact/epsilon.hpp"
#include "hyperfact/parallel.hpp"

namespace hyperfact {

std::vector<DatasetRow> dataset_rows(std::uint64_t from, std::uint64_t to,
                                     unsigned workers) {
  std::vector<OddSemiprime> semis;
  for (const auto& sp : odd_semiprimes_below(to + 1))
    if (sp.n >= from) semis.push_back(sp);

  auto build = [](const OddSemiprime& sp) {
    DatasetRow row;
    row.n = sp.n;
    row.p = sp.p;
    row.q = sp.q;
    const Int n(sp.n);
    const auto prof = EpsilonProfile::from_factors(Int(sp.p), Int(sp.q));
    row.epsilon = prof.epsilon;
    row.k = prof.k;
    row.sum_pq = prof.sum_pq;
    row.phi = prof.phi;
    row.hyper_x = prof.hyper_x;
    row.hyper_y = prof.hyper_y;
    row.f1_at_eps = f1(n, prof.epsilon);
    row.conjecture_holds = gamma_scan(n, n).conjecture_holds;
    return row;
  };
  return parallel_map(semis, workers, build);
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char ch : raw) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

void write_dataset_csv(std::ostream& out, const std::vector<DatasetRow>& rows) {
  out << "n,p,q,epsilon,k,sum_pq,phi,hyper_x,hyper_y,f1_at_eps,conjecture_holds\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.p << ',' << r.q << ',' << r.epsilon.get_str() << ','
        << r.k.get_str() << ',' << r.sum_pq.get_str() << ',' << r.phi.get_str()
        << ',' << r.hyper_x.get_str() << ',' << r.hyper_y.get_str() << ','
        << r.f1_at_eps.get_str() << ','
        << (r.conjecture_holds ? "true" : "false") << '\n';
  }
}

void write_dataset_json(std::ostream& out, const std::vector<DatasetRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json obj;
    obj["n"] = r.n;
    obj["p"] = r.p;
    obj["q"] = r.q;
    obj["epsilon"] = r.epsilon.get_str();
    obj["k"] = r.k.get_str();
    obj["sum_pq"] = r.sum_pq.get_str();
    obj["phi"] = r.phi.get_str();
    obj["hyper_x"] = r.hyper_x.get_str();
    obj["hyper_y"] = r.hyper_y.get_str();
    obj["f1_at_eps"] = r.f1_at_eps.get_str();
    obj["conjecture_holds"] = r.conjecture_holds;
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

}  // namespace hyperfact
