#include "k3tau/report.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace k3tau {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string verdict_text(const HilbVerdict& v) {
  if (!v.birational) return "not birational";
  return "birational via " + v.equation + ": " + equation_text(v.d, v.n, v.equation) + ", (p, q) = (" +
         to_string(v.p) + ", " + to_string(v.q) + ")";
}

std::string threestar_text(const ThreeStar& t) {
  if (!t.holds) return "no";
  return "yes (a=" + to_string(t.witness->a) + ", n=" + to_string(t.witness->n) + ")";
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

ReportRecord make_record(std::int64_t d, const RecordOptions& options) {
  ReportRecord r;
  r.d = d;
  r.classification = classify_d(d);
  for (std::int64_t n : options.ns)
    if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (!r.classification.tau_extended) return r;

  if (options.construct || options.certify_dir) {
    const TauCertificate cert = build_gtilde(d);
    r.mukai_v = cert.v;
    r.L_tau = cert.L_tau;
    if (options.certify_dir) {
      std::filesystem::create_directories(*options.certify_dir);
      const std::string path = (std::filesystem::path(*options.certify_dir) / ("tau_d" + std::to_string(d) + ".json")).string();
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write " + path);
      out << dump(certificate_json(cert));
      r.certificates.push_back(path);
    }
  } else {
    const Integer dd = static_cast<long>(d);
    r.mukai_v = MukaiVector{3, 1, dd / 6, dd};
    r.L_tau = tau_polarization(d);
  }
  for (std::int64_t n : options.ns) r.hilb[n] = hilb_birational(d, n);
  return r;
}

Json record_json(const ReportRecord& r) {
  Json out{{"d", r.d}, {"classification", classification_json(r.classification)}};
  out["mukai_v"] = r.mukai_v ? mukai_json(*r.mukai_v) : Json(nullptr);
  out["L_tau"] = r.L_tau ? mukai_json(*r.L_tau) : Json(nullptr);
  Json hilb = Json::object();
  for (const auto& [n, v] : r.hilb) hilb[std::to_string(n)] = hilb_json(v);
  out["hilb"] = hilb;
  out["certificates"] = r.certificates;
  return out;
}

ReportRecord record_from_json(const Json& j) {
  ReportRecord r;
  r.d = j.at("d").get<std::int64_t>();
  const Json& c = j.at("classification");
  r.classification.d = c.at("d").get<std::int64_t>();
  r.classification.star = c.at("star").get<bool>();
  r.classification.twostar = c.at("twostar").get<bool>();
  r.classification.threestar.holds = c.at("threestar").get<bool>();
  if (!c.at("a").is_null())
    r.classification.threestar.witness = ThreeStarWitness{integer_from_json(c.at("a")), integer_from_json(c.at("n"))};
  r.classification.tau_strict = c.at("tau_strict").get<bool>();
  r.classification.tau_extended = c.at("tau_extended").get<bool>();
  if (!j.at("mukai_v").is_null()) r.mukai_v = mukai_from_json(j.at("mukai_v"));
  if (!j.at("L_tau").is_null()) r.L_tau = mukai_from_json(j.at("L_tau"));
  for (const auto& [key, h] : j.at("hilb").items()) {
    HilbVerdict v;
    v.d = h.at("d").get<std::int64_t>();
    v.n = h.at("n").get<std::int64_t>();
    v.birational = h.at("birational").get<bool>();
    v.scope = h.at("scope").get<std::string>();
    if (v.birational) {
      v.equation = h.at("equation").get<std::string>();
      v.p = integer_from_json(h.at("p"));
      v.q = integer_from_json(h.at("q"));
    }
    r.hilb[std::stoll(key)] = v;
  }
  r.certificates = j.at("certificates").get<std::vector<std::string>>();
  return r;
}

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + name + "' (table, json, csv)");
}

std::string render_check(const ReportRecord& r, Format format) {
  if (format == Format::Json) return dump(record_json(r));
  if (format == Format::Csv) return render_scan({r}, [&] {
      std::vector<std::int64_t> ns;
      for (const auto& [n, v] : r.hilb) ns.push_back(n);
      return ns;
    }(), Format::Csv);

  const auto& c = r.classification;
  std::ostringstream out;
  auto line = [&](const std::string& key, const std::string& value) { out << pad(key, 14) << value << "\n"; };
  line("d", std::to_string(r.d));
  line("star", yes_no(c.star));
  line("twostar", yes_no(c.twostar));
  line("threestar", threestar_text(c.threestar));
  line("tau_strict", yes_no(c.tau_strict));
  line("tau_extended", yes_no(c.tau_extended));
  if (r.mukai_v) line("v", to_string(*r.mukai_v));
  if (r.L_tau) line("L_tau", to_string(*r.L_tau));
  for (const auto& [n, v] : r.hilb) line("hilb^" + std::to_string(n), verdict_text(v) + " [" + v.scope + "]");
  for (const auto& path : r.certificates) line("certificate", path);
  return out.str();
}

std::string render_scan(const std::vector<ReportRecord>& rows, const std::vector<std::int64_t>& ns, Format format) {
  if (format == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(record_json(r));
    return dump(arr);
  }

  std::vector<std::string> header{"d", "star", "twostar", "threestar", "a", "n", "tau_strict", "tau_extended", "v",
                                  "L_tau"};
  for (std::int64_t n : ns) {
    const std::string k = "hilb" + std::to_string(n);
    header.insert(header.end(), {k, k + "_equation", k + "_p", k + "_q"});
  }
  std::vector<std::vector<std::string>> table{header};
  for (const auto& r : rows) {
    const auto& c = r.classification;
    std::vector<std::string> row{std::to_string(r.d), yes_no(c.star), yes_no(c.twostar), yes_no(c.threestar.holds),
                                 c.threestar.witness ? to_string(c.threestar.witness->a) : "",
                                 c.threestar.witness ? to_string(c.threestar.witness->n) : "", yes_no(c.tau_strict),
                                 yes_no(c.tau_extended), r.mukai_v ? to_string(*r.mukai_v) : "",
                                 r.L_tau ? to_string(*r.L_tau) : ""};
    for (std::int64_t n : ns) {
      auto it = r.hilb.find(n);
      if (it == r.hilb.end()) {
        row.insert(row.end(), {"", "", "", ""});
      } else {
        const HilbVerdict& v = it->second;
        row.insert(row.end(), {yes_no(v.birational), v.equation, v.birational ? to_string(v.p) : "",
                               v.birational ? to_string(v.q) : ""});
      }
    }
    table.push_back(std::move(row));
  }

  std::ostringstream out;
  if (format == Format::Csv) {
    for (const auto& row : table) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << "\n";
    }
    return out.str();
  }
  if (rows.empty()) return "";
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : table)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : table) {
    std::string text;
    for (std::size_t i = 0; i < row.size(); ++i) text += (i ? "  " : "") + pad(row[i], width[i]);
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << "\n";
  }
  return out.str();
}

bool passes_filter(const DClassification& c, const std::string& filter) {
  if (filter == "all") return true;
  if (filter == "star") return c.star;
  if (filter == "twostar") return c.twostar;
  if (filter == "threestar") return c.threestar.holds;
  if (filter == "tau_strict") return c.tau_strict;
  if (filter == "tau_extended") return c.tau_extended;
  throw std::invalid_argument("unknown filter '" + filter + "' (all, star, twostar, threestar, tau_strict, tau_extended)");
}

void require_filter(const std::string& filter) { passes_filter(DClassification{}, filter); }

unsigned worker_count() {
  if (const char* env = std::getenv("K3TAU_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 1) throw std::invalid_argument("K3TAU_WORKERS must be a positive integer");
    return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<ReportRecord> scan(std::int64_t d_from, std::int64_t d_to, const std::string& filter,
                               const RecordOptions& options, unsigned workers) {
  require_filter(filter);
  std::vector<std::int64_t> ds;
  for (std::int64_t d = std::max<std::int64_t>(d_from, 2); d <= d_to; ++d)
    if (d % 2 == 0) ds.push_back(d);
  auto records = parallel_map(
      ds,
      [&](std::int64_t d) -> std::optional<ReportRecord> {
        DClassification c = classify_d(d);
        if (!passes_filter(c, filter)) return std::nullopt;
        return make_record(d, options);
      },
      workers);
  std::vector<ReportRecord> out;
  for (auto& r : records)
    if (r) out.push_back(std::move(*r));
  return out;
}

}  // namespace k3tau
