#include "monocheck/cli/report.hpp"

#include <sstream>

namespace monocheck::cli {

namespace {

const char* status_name(IrreducibilityStatus s) {
  switch (s) {
    case IrreducibilityStatus::Certified: return "certified";
    case IrreducibilityStatus::Reducible: return "reducible";
    case IrreducibilityStatus::Unknown: return "unknown";
  }
  return "?";
}

nlohmann::json integer_json(const Integer& v) {
  if (fits_i64(v)) return to_i64(v);
  return v.get_str();
}

nlohmann::json certificate_json(const Certificate& c) {
  nlohmann::json j;
  j["kind"] = kind_name(c.kind);
  j["target"] = c.target == CertificateTarget::Base ? "f" : "f(x^k)";
  if (c.prime) j["prime"] = integer_json(*c.prime);
  if (!c.primes.empty()) j["primes"] = c.primes;
  return j;
}

}  // namespace

std::string witness_text(const MonogenityReport& r) { return r.witness ? r.witness->get_str() : "-"; }

std::string reason_text(const MonogenityReport& r) {
  if (r.reason) return reason_name(*r.reason);
  if (r.verdict == Verdict::Inconclusive) return r.cause;
  return "-";
}

nlohmann::json report_json(const MonogenityReport& r, const std::string& input, std::uint64_t k, const Timings& timings) {
  nlohmann::json j;
  j["input"] = input;
  j["k"] = k;
  j["verdict"] = verdict_name(r.verdict);
  j["witness"] = r.witness ? integer_json(*r.witness) : nlohmann::json(nullptr);
  j["reasons"] = nlohmann::json::array();
  if (r.reason) j["reasons"].push_back(reason_name(*r.reason));
  if (r.verdict == Verdict::Inconclusive && !r.cause.empty()) j["reasons"].push_back(r.cause);

  nlohmann::json cond;
  cond["monogenic_base"] = check_name(r.monogenic_base);
  cond["f0_squarefree"] = check_name(r.f0_squarefree);
  nlohmann::json primes = nlohmann::json::object();
  for (const auto& [p, c] : r.prime_checks) primes[std::to_string(p)] = check_name(c);
  cond["prime_checks"] = primes;
  cond["irreducibility"] = status_name(r.irreducibility);
  cond["notes"] = r.notes;
  j["conditions"] = cond;

  j["certificates"] = nlohmann::json::array();
  for (const auto& c : r.certificates) j["certificates"].push_back(certificate_json(c));
  if (r.reducible_witness) {
    nlohmann::json w;
    w["kind"] = "reducible";
    w["factor"] = r.reducible_witness->factor.to_string();
    if (r.reducible_witness->root) w["root"] = integer_json(*r.reducible_witness->root);
    j["certificates"].push_back(w);
  }

  nlohmann::json t = nlohmann::json::object();
  for (const auto& [label, ms] : timings) t[label] = ms;
  j["timings"] = t;
  return j;
}

std::string report_text(const MonogenityReport& r, const std::string& input, std::uint64_t k, const Timings& timings) {
  std::ostringstream os;
  os << "f(x^k) with f = " << input << ", k = " << k << "\n";
  os << "verdict: " << verdict_name(r.verdict);
  if (r.witness) os << " (prime " << *r.witness << ")";
  if (r.reason) os << " [" << reason_name(*r.reason) << "]";
  os << "\n";
  if (r.verdict == Verdict::Inconclusive) os << "cause: " << r.cause << "\n";
  os << "  f monogenic:       " << check_name(r.monogenic_base) << "\n";
  for (const auto& [p, c] : r.prime_checks) os << "  p=" << p << " index of f(x^p): " << check_name(c) << "\n";
  os << "  f(0) squarefree:   " << check_name(r.f0_squarefree) << "\n";
  os << "  irreducibility:    " << status_name(r.irreducibility);
  for (const auto& c : r.certificates) os << "; " << c.describe();
  if (r.reducible_witness) os << "; " << r.reducible_witness->describe();
  os << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  for (const auto& [label, ms] : timings) os << "time " << label << ": " << ms << " ms\n";
  return os.str();
}

FamilyRow family_row(const std::string& params, std::uint64_t k, const FamilyOutcome& outcome) {
  if (const auto* hv = std::get_if<HypothesisViolated>(&outcome)) return {params, k, "HypothesisViolated", "-", hv->message};
  const auto& r = std::get<MonogenityReport>(outcome);
  return {params, k, verdict_name(r.verdict), witness_text(r), reason_text(r)};
}

std::string row_tsv(const FamilyRow& row) {
  return row.params + "\t" + std::to_string(row.k) + "\t" + row.verdict + "\t" + row.witness + "\t" + row.reason;
}

nlohmann::json row_json(const FamilyRow& row) {
  return {{"params", row.params}, {"k", row.k}, {"verdict", row.verdict}, {"witness", row.witness}, {"reason", row.reason}};
}

}  // namespace monocheck::cli
