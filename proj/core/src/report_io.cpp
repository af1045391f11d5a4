#include "wiener/report_io.hpp"

#include <charconv>
#include <cmath>

#include "json.hpp"
#include "wiener/polynomial.hpp"

namespace wiener {

namespace {

using json = nlohmann::ordered_json;

json evidence_json(const std::vector<Evidence>& items) {
  json a = json::array();
  for (const auto& e : items) a.push_back({{"subject", e.subject}, {"detail", e.detail}});
  return a;
}

json report_json(const ClaimReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return {{"claim_id", r.claim_id},
          {"params", params},
          {"verdict", std::string(to_string(r.verdict))},
          {"witnesses", evidence_json(r.witnesses)},
          {"counterexamples", evidence_json(r.counterexamples)},
          {"notes", r.notes},
          {"runtime_s", r.runtime.count()}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string params_text(const std::map<std::string, std::int64_t>& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ';';
    s += k + "=" + std::to_string(v);
  }
  return s;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string to_json(const ClaimReport& report, int indent) { return report_json(report).dump(indent); }

std::string to_json(const std::vector<ClaimReport>& reports, int indent) {
  json a = json::array();
  for (const auto& r : reports) a.push_back(report_json(r));
  return a.dump(indent);
}

std::string to_json(const ExtremalReport& report, int indent) {
  json argmax = json::array();
  for (const auto& a : report.argmax) {
    std::vector<std::uint64_t> d = a.distribution.counts();
    argmax.push_back({{"description", a.description}, {"d", d}});
  }
  json j = {{"order", report.order},
            {"objective", std::string(to_string(report.objective))},
            {"class", std::string(to_string(report.instance_class))},
            {"best_value", report.best_value},
            {"argmax", argmax}};
  return j.dump(indent);
}

std::string suite_csv(const std::vector<ClaimReport>& reports) {
  std::string out = "claim_id,params,verdict,witnesses,counterexamples,runtime_s\n";
  for (const auto& r : reports) {
    out += csv_field(r.claim_id) + "," + csv_field(params_text(r.params)) + "," + std::string(to_string(r.verdict)) +
           "," + std::to_string(r.witnesses.size()) + "," + std::to_string(r.counterexamples.size()) + "," +
           format_double(r.runtime.count()) + "\n";
  }
  return out;
}

RootRecord analyse(std::string source, const DistanceDistribution& dd) {
  std::vector<mpz_class> c;
  for (auto v : dd.counts()) c.emplace_back(static_cast<unsigned long>(v));
  const ReducedPolynomial p(std::move(c));
  return {std::move(source), dd, roots(p), purely_imaginary_roots(p), {}};
}

std::string to_json(const std::vector<RootRecord>& records, int indent) {
  json a = json::array();
  for (const auto& rec : records) {
    if (!rec.distribution) {
      a.push_back({{"source", rec.source}, {"error", rec.error}});
      continue;
    }
    const auto& dd = *rec.distribution;
    std::vector<mpz_class> c;
    for (auto v : dd.counts()) c.emplace_back(static_cast<unsigned long>(v));
    const WienerPolynomial w(c);
    const ReducedPolynomial p(c);

    json roots = json::array();
    // 0 is a root of every W(G;x).
    roots.push_back({{"re", 0.0}, {"im", 0.0}, {"residual", 0.0}, {"exact", true}, {"form", "0"}});
    for (const auto& r : rec.roots) {
      json j = {{"re", r.re}, {"im", r.im}, {"residual", r.residual}, {"exact", r.exact}};
      if (r.exact) j["form"] = r.exact_form;
      roots.push_back(j);
    }
    json imag = json::array();
    for (const auto& ir : rec.imaginary) {
      imag.push_back({{"b", ir.b}, {"exact", ir.exact}, {"text", ir.text}});
    }
    std::vector<std::uint64_t> d = dd.counts();
    json j = {{"source", rec.source},
              {"order", dd.order()},
              {"d", d},
              {"polynomial", to_string(w)},
              {"wiener_index", wiener_index(w).get_str()},
              {"diameter", dd.diameter()}};
    if (p.degree() > 0) {
      const auto ek = enestrom_kakeya(p);
      j["annulus"] = {{"r", to_string(ek.r)}, {"R", to_string(ek.R)}};
    }
    j["roots"] = roots;
    j["purely_imaginary"] = imag;
    a.push_back(j);
  }
  return a.dump(indent);
}

std::string to_csv(const std::vector<RootRecord>& records) {
  std::string out = "source,d,re,im,residual,exact,error\n";
  for (const auto& rec : records) {
    if (!rec.distribution) {
      out += csv_field(rec.source) + ",,,,,," + csv_field(rec.error) + "\n";
      continue;
    }
    const std::string prefix = csv_field(rec.source) + "," + csv_field(to_string(*rec.distribution)) + ",";
    out += prefix + "0,0,0,1,\n";
    for (const auto& r : rec.roots) {
      out += prefix + format_double(r.re) + "," + format_double(r.im) + "," + format_double(r.residual) + "," +
             (r.exact ? "1" : "0") + ",\n";
    }
  }
  return out;
}

std::string scatter_csv(const std::vector<RootRecord>& records) {
  std::string out = "re,im\n";
  for (const auto& rec : records) {
    if (!rec.distribution) continue;
    out += "0,0\n";
    for (const auto& r : rec.roots) out += format_double(r.re) + "," + format_double(r.im) + "\n";
  }
  return out;
}

}  // namespace wiener
