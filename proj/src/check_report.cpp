#include "precy/check_report.hpp"

namespace precy {

CheckReport combine_reports(std::string identity, const std::vector<CheckReport>& parts) {
  CheckReport out;
  out.identity = std::move(identity);
  for (const auto& p : parts) {
    out.evaluated += p.evaluated;
    out.failures += p.failures;
    if (out.pass && !p.pass) {
      out.pass = false;
      out.witnesses = p.witnesses;
    }
  }
  return out;
}

SparseResidual sparse_residual(const Vec& v) {
  SparseResidual out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) out.push_back({{static_cast<int>(i)}, v[i]});
  }
  return out;
}

}  // namespace precy
