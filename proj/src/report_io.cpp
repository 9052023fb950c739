#include "blockdim/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace blockdim {

namespace {

bool selected(const BlockEntry& e, OrderVariant v) {
  return v == OrderVariant::RootLattice ? e.minimal : e.minimal_dominant_order;
}

std::string joined(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::vector<std::string> int_strings(const IntVec& v) {
  std::vector<std::string> out;
  for (auto x : v) out.push_back(std::to_string(x));
  return out;
}

} // namespace

nlohmann::json report_to_json(const RootSystem& rs, const BlockReport& r, OrderVariant variant) {
  using nlohmann::json;
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back(json{{"mu", e.mu.to_strings()},
                           {"dim_S", e.dim_S},
                           {"dim_N", e.dim_N},
                           {"dim_Q", e.dim_Q},
                           {"minimal", selected(e, variant)},
                           {"minimal_root_lattice", e.minimal},
                           {"minimal_p_plus", e.minimal_dominant_order},
                           {"v_mult", e.v_weight_mult}});
  }
  json disagreements = json::array();
  for (const auto& w : r.order_disagreements) disagreements.push_back(w.to_strings());

  return json{{"type", std::string(1, rs.type_letter())},
              {"rank", rs.rank()},
              {"lambda", r.lambda.to_strings()},
              {"v", int_strings(r.v_highest_weight)},
              {"entries", entries},
              {"end_v_zero", r.end_v_zero},
              {"sum_check", r.sum_check},
              {"order_disagreements", disagreements},
              {"checks",
               json{{"lemma_6_4", r.checks.dimension_identity},
                    {"cor_6_3", r.checks.necessary_condition},
                    {"order_agreement", r.checks.order_agreement},
                    {"flag_conservation", r.checks.flag_conservation}}}};
}

void write_csv_header(std::ostream& os) {
  os << "type,rank,lambda,v,mu,dim_S,dim_N,dim_Q,minimal,v_mult,end_v_zero,sum_check\n";
}

void write_csv(std::ostream& os, const RootSystem& rs, const BlockReport& r, OrderVariant variant) {
  const std::string lambda = joined(r.lambda.to_strings(), " ");
  const std::string v = joined(int_strings(r.v_highest_weight), " ");
  for (const auto& e : r.entries) {
    os << rs.type_letter() << ',' << rs.rank() << ',' << lambda << ',' << v << ','
       << joined(e.mu.to_strings(), " ") << ',' << e.dim_S << ',' << e.dim_N << ',' << e.dim_Q << ','
       << (selected(e, variant) ? "true" : "false") << ',' << e.v_weight_mult << ',' << r.end_v_zero << ','
       << r.sum_check << '\n';
  }
}

void write_table(std::ostream& os, const RootSystem& rs, const BlockReport& r, OrderVariant variant) {
  os << rs.name() << "  lambda = " << r.lambda << "  V = V(" << joined(int_strings(r.v_highest_weight), ", ")
     << ")  dim V = " << r.dim_v() << '\n';

  std::size_t width = 4;
  for (const auto& e : r.entries) width = std::max(width, e.mu.str().size());
  os << "  " << std::left << std::setw(static_cast<int>(width)) << "mu" << std::right << std::setw(8) << "dim_S"
     << std::setw(8) << "dim_N" << std::setw(8) << "dim_Q" << std::setw(9) << "minimal" << std::setw(8) << "v_mult"
     << '\n';
  for (const auto& e : r.entries) {
    os << "  " << std::left << std::setw(static_cast<int>(width)) << e.mu.str() << std::right << std::setw(8)
       << e.dim_S << std::setw(8) << e.dim_N << std::setw(8) << e.dim_Q << std::setw(9)
       << (selected(e, variant) ? "yes" : "no") << std::setw(8) << e.v_weight_mult;
    if (e.minimal != e.minimal_dominant_order) os << "  *orders disagree";
    os << '\n';
  }
  auto ok = [](bool b) { return b ? "ok" : "FAILED"; };
  os << "  dim (End V)_0 = " << r.end_v_zero << "   sum dim_S*dim_Q = " << r.sum_check << '\n';
  os << "  dimension identity: " << ok(r.checks.dimension_identity)
     << "   necessary condition: " << ok(r.checks.necessary_condition)
     << "   order agreement: " << (r.checks.order_agreement ? "yes" : "no")
     << "   flag conservation: " << ok(r.checks.flag_conservation) << '\n';
}

} // namespace blockdim
