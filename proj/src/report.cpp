#include "zariski/report.hpp"

#include <sstream>

#include "zariski/config_io.hpp"

namespace zariski {

namespace {

using nlohmann::json;

json set_json(const ExceptionalSet& labels) {
  json out = json::array();
  for (const auto& label : labels) out.push_back(label);
  return out;
}

json certificate_fields(const ValidatedConfig& cfg, const ComplementarityCertificate& cert) {
  json out = minors_json(cfg.form());
  out["antinef_ok"] = cert.antinef_ok;
  out["support_orthogonality_ok"] = cert.support_orthogonality_ok;
  return out;
}

std::string format_set(const ExceptionalSet& labels) {
  std::string out = "{";
  for (auto it = labels.begin(); it != labels.end(); ++it) {
    if (it != labels.begin()) out += ", ";
    out += *it;
  }
  return out + "}";
}

}  // namespace

std::string provenance_name(GProvenance provenance) {
  return provenance == GProvenance::User ? "user" : "fundamental_cycle";
}

json minors_json(const IntersectionForm& form) {
  json minors = json::array();
  for (const auto& minor : form.minors) minors.push_back(to_string(minor));
  json signs = json::array();
  for (int s : form.minor_signs) signs.push_back(s < 0 ? "-" : "+");
  return {{"leading_minors", minors}, {"minor_signs", signs}};
}

json check_json(const ValidatedConfig& cfg) {
  json out = minors_json(cfg.form());
  out["valid"] = true;
  out["rank"] = cfg.rank();
  return out;
}

json decomposition_json(const ValidatedConfig& cfg, const ZariskiDecomposition& dec) {
  return {{"delta", divisor_json(dec.delta)},
          {"b", divisor_json(dec.b)},
          {"certificate", certificate_fields(cfg, dec.certificate)}};
}

json fundamental_cycle_json(const FundamentalCycle& cycle) {
  json z = json::object();
  for (const auto& [label, value] : cycle.z.terms()) {
    z[label] = boost::multiprecision::numerator(value).convert_to<long>();
  }
  return {{"Z", z}, {"laufer_steps", cycle.laufer_steps}};
}

json report_json(const ValidatedConfig& cfg, const ClassificationReport& report) {
  json out = decomposition_json(cfg, report.decomposition);
  out["spread"] = std::string(spread_name(report.spread));
  out["mr_associated_eventually"] = report.mr_associated_eventually;
  out["redundant_exceptional"] = set_json(report.redundant_exceptional);
  out["negative_wall"] = set_json(report.negative_wall);
  out["persistent_fixed_candidates"] = set_json(report.persistent_fixed_candidates);
  if (report.symbolic_form) {
    json form = json::array();
    for (const auto& [label, value] : *report.symbolic_form) {
      form.push_back(json::array({label, to_string(value)}));
    }
    out["symbolic_form"] = form;
  } else {
    out["symbolic_form"] = nullptr;
  }
  out["hilbert"] = {{"alpha", to_string(report.hilbert.alpha)},
                    {"G", divisor_json(report.hilbert.g)},
                    {"sigma", "bounded, not computed"}};
  out["g_provenance"] = provenance_name(report.hilbert.g_used);
  // Reserved for a future certificate separating spread 0 from spread 1.
  out["spread_one_certificate"] = nullptr;
  out["caveats"] = report.caveats;
  return out;
}

std::string format_divisor(const QDivisor& d) {
  if (d.is_zero()) return "0";
  std::string out;
  for (const auto& [label, value] : d.terms()) {
    Rational magnitude = value;
    if (out.empty()) {
      if (value < 0) out += "-";
    } else {
      out += value < 0 ? " - " : " + ";
    }
    if (magnitude < 0) magnitude = -magnitude;
    if (magnitude != 1) out += to_string(magnitude) + " ";
    out += label;
  }
  return out;
}

std::string check_text(const ValidatedConfig& cfg) {
  std::ostringstream out;
  out << "valid configuration, " << cfg.rank() << " exceptional curve"
      << (cfg.rank() == 1 ? "" : "s") << "\nleading minors: [";
  for (std::size_t k = 0; k < cfg.form().minors.size(); ++k) {
    out << (k ? ", " : "") << to_string(cfg.form().minors[k]);
  }
  out << "]\n";
  return out.str();
}

std::string decomposition_text(const ZariskiDecomposition& dec) {
  std::ostringstream out;
  out << "delta = " << format_divisor(dec.delta) << "\n"
      << "B     = " << format_divisor(dec.b) << "\n"
      << "certificate: anti-nef " << (dec.certificate.antinef_ok ? "ok" : "FAILED")
      << ", support orthogonality " << (dec.certificate.support_orthogonality_ok ? "ok" : "FAILED")
      << "\n";
  return out.str();
}

std::string fundamental_cycle_text(const FundamentalCycle& cycle) {
  return "Z = " + format_divisor(cycle.z) + "\nlaufer steps: " +
         std::to_string(cycle.laufer_steps) + "\n";
}

std::string report_text(const ClassificationReport& report) {
  std::ostringstream out;
  out << "Zariski decomposition\n";
  std::istringstream dec(decomposition_text(report.decomposition));
  for (std::string line; std::getline(dec, line);) out << "  " << line << "\n";
  if (report.spread == SpreadClass::Two) {
    out << "analytic spread: 2 (negative wall " << format_set(report.negative_wall) << ")\n";
  } else {
    out << "analytic spread: 0 or 1 (negative wall empty)\n";
  }
  out << "m_R associated to R/I(n delta) for large n: "
      << (report.mr_associated_eventually ? "yes" : "no") << "\n"
      << "redundant exceptional valuations: " << format_set(report.redundant_exceptional) << "\n"
      << "persistent fixed-component candidates: "
      << format_set(report.persistent_fixed_candidates) << "\n";
  if (report.symbolic_form) {
    out << "symbolic form: I(nD) = ";
    if (report.symbolic_form->empty()) out << "R";
    for (std::size_t i = 0; i < report.symbolic_form->size(); ++i) {
      const auto& [label, value] = (*report.symbolic_form)[i];
      out << (i ? " cap " : "") << "Q_" << label << "^(ceil(n*" << to_string(value) << "))";
    }
    out << "\n";
  } else {
    out << "symbolic form: not applicable (spread 2)\n";
  }
  out << "Hilbert slope: alpha = " << to_string(report.hilbert.alpha) << " (G = "
      << format_divisor(report.hilbert.g) << ", " << provenance_name(report.hilbert.g_used)
      << ")\n";
  if (!report.caveats.empty()) {
    out << "caveats:\n";
    for (const auto& caveat : report.caveats) out << "  - " << caveat << "\n";
  }
  return out.str();
}

}  // namespace zariski
