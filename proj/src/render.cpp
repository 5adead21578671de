#include <sstream>

#include <json.hpp>

#include "towerlab/errors.hpp"
#include "towerlab/harness.hpp"

namespace towerlab {

namespace {

using nlohmann::json;

json sign_json(std::optional<Sign> s) { return s ? json(to_int(*s)) : json(nullptr); }

json evidence_json(const Evidence& ev) {
  const SymbolProfile& p = ev.profile;
  json j;
  j["symbols"] = {{"2/p1", to_int(p.leg_2p1)}, {"2/p2", to_int(p.leg_2p2)}, {"p1/p2", to_int(p.leg_p1p2)},
                  {"q/p1", to_int(p.leg_qp1)}, {"q/p2", to_int(p.leg_qp2)}, {"t1", sign_json(p.t1)},
                  {"t2", sign_json(p.t2)},     {"s", sign_json(p.s4)},      {"alpha", sign_json(p.alpha)}};
  j["four_rank_redei"] = ev.four_rank_redei;
  j["narrow_cl2"] = ev.narrow_cl2;
  j["kaplan"] = nullptr;
  if (ev.kaplan) {
    const KaplanData& k = *ev.kaplan;
    j["kaplan"] = {{"gamma", k.gamma}, {"e", k.e}, {"d", k.d}, {"r", k.r}, {"s", k.s}, {"A", k.A}};
  }
  const auto classes = [](const std::optional<SquareClassPair>& c) {
    return c ? json{{"minus", c->f_minus}, {"plus", c->f_plus}} : json(nullptr);
  };
  j["x_square_classes"] = classes(ev.x_classes);
  j["z_square_classes"] = classes(ev.z_classes);
  j["delta"] = ev.delta ? json{{"value", to_string(ev.delta->delta)}, {"sign", to_int(ev.delta->sign)}} : json(nullptr);
  j["z_square"] = ev.z_square ? json(*ev.z_square) : json(nullptr);
  j["norm_p1p2"] = sign_json(ev.norm_p1p2);
  j["units"] = nullptr;
  if (ev.units) {
    const UnitIndices& u = *ev.units;
    j["units"] = {{"q1", u.q1},
                  {"q2", u.q2},
                  {"q3", u.q3},
                  {"fsu", {u.fsu[0].to_string(), u.fsu[1].to_string(), u.fsu[2].to_string()}}};
  }
  j["n"] = ev.n;
  j["n_i"] = ev.n_i ? json(*ev.n_i) : json(nullptr);
  json h2 = json::object();
  for (const auto& [m, h] : ev.subfield_h2) h2[std::to_string(m)] = h;
  j["subfield_h2"] = h2;
  j["cyclicity_pattern"] = ev.thm4 ? json(to_string(*ev.thm4)) : json(nullptr);
  j["rank_profile"] = ev.ranks ? json{ev.ranks->r1, ev.ranks->r2, ev.ranks->r3} : json(nullptr);
  j["basis"] = ev.basis;
  j["flags"] = ev.flags;
  return j;
}

json verdict_json(const ClassificationVerdict& v) {
  return {{"d", v.d()},
          {"p1", v.triple.p1.value()},
          {"p2", v.triple.p2.value()},
          {"q", v.triple.q.value()},
          {"case", to_string(v.case_tag)},
          {"cl2_k", v.cl2_k},
          {"g_type", to_string(v.g_type)},
          {"hilbert_cl2", to_string(v.hilbert_cl2)},
          {"evidence", evidence_json(v.evidence)}};
}

std::string cell(std::optional<Sign> s) { return s ? std::to_string(to_int(*s)) : ""; }

// d, p1, p2, q, case, q1, q2, q3, alpha, s, t1, t2, n, n1, n2, n3, g_type, hilbert_cl2
std::vector<std::string> cells(const ClassificationVerdict& v) {
  const Evidence& ev = v.evidence;
  std::vector<std::string> out{std::to_string(v.d()), std::to_string(v.triple.p1.value()),
                               std::to_string(v.triple.p2.value()), std::to_string(v.triple.q.value()),
                               std::string(to_string(v.case_tag))};
  for (int q : {ev.units ? ev.units->q1 : 0, ev.units ? ev.units->q2 : 0, ev.units ? ev.units->q3 : 0}) {
    out.push_back(q ? std::to_string(q) : "");
  }
  for (auto s : {ev.profile.alpha, ev.profile.s4, ev.profile.t1, ev.profile.t2}) out.push_back(cell(s));
  out.push_back(std::to_string(ev.n));
  for (int i = 0; i < 3; ++i) out.push_back(ev.n_i ? std::to_string((*ev.n_i)[i]) : "");
  out.emplace_back(to_string(v.g_type));
  out.emplace_back(to_string(v.hilbert_cl2));
  return out;
}

constexpr const char* kCsvHeader = "d,p1,p2,q,case,q1,q2,q3,alpha,s,t1,t2,n,n1,n2,n3,g_type,hilbert_cl2";

}  // namespace

OutputFormat parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "markdown" || s == "md") return OutputFormat::Markdown;
  throw Error(Errc::InvalidArgument, "unknown format '" + std::string(s) + "'");
}

std::string render_json(const ClassificationVerdict& v) { return verdict_json(v).dump(2) + "\n"; }

std::string render(const std::vector<ClassificationVerdict>& verdicts, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::Json: {
      json arr = json::array();
      for (const auto& v : verdicts) arr.push_back(verdict_json(v));
      os << arr.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      os << kCsvHeader << "\n";
      for (const auto& v : verdicts) {
        const auto c = cells(v);
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
        os << "\n";
      }
      break;
    case OutputFormat::Markdown:
      os << "| d=2p1p2q | case | q1 | q2 | q3 | alpha | s | t1 | t2 | n | n1 | n2 | n3 | g_type | hilbert_cl2 |\n";
      os << "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
      for (const auto& v : verdicts) {
        const auto c = cells(v);
        os << "| " << c[0] << "=2·" << c[1] << "·" << c[2] << "·" << c[3];
        for (std::size_t i = 4; i < c.size(); ++i) os << " | " << c[i];
        os << " |\n";
      }
      break;
  }
  return os.str();
}

}  // namespace towerlab
