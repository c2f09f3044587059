#include "xrank/cli/app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "xrank/apolarity/cubic.hpp"
#include "xrank/apolarity/quartic.hpp"
#include "xrank/binary/sylvester.hpp"
#include "xrank/cli/codec.hpp"
#include "xrank/lab/f1.hpp"
#include "xrank/lab/families.hpp"

namespace xrank::cli {

namespace {

constexpr int kInvalid = 2;
constexpr int kUndecided = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json header(const std::string& command, std::uint64_t seed) {
  return {{"command", command}, {"version", XRANK_VERSION}, {"seed", seed}};
}

Json points_json(const std::vector<std::vector<Rational>>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(encode_point(p));
  return out;
}

Json ledger_json(const DimensionLedger& l) {
  auto row = [](const LedgerRow& r) {
    Json s = Json::array();
    for (const auto& [name, v] : r.summands) s.push_back({{"label", name}, {"value", v}});
    return Json{{"case", r.label}, {"summands", s}, {"total", r.total}};
  };
  Json rows = Json::array(), alts = Json::array();
  for (const auto& r : l.rows) rows.push_back(row(r));
  for (const auto& r : l.alternatives) alts.push_back(row(r));
  return {{"rows", rows},
          {"alternatives", alts},
          {"bound", l.bound},
          {"join_bound", l.join_bound},
          {"ambient_dim", l.ambient_dim},
          {"join_is_proper", l.join_is_proper()}};
}

Json ii1_json(long d, long g) {
  auto r = ii1_check(d, g);
  Json j{{"d", d},
         {"g", g},
         {"odd_route", r.odd_route},
         {"even_route", r.even_route},
         {"cusp_count", r.cusp_count},
         {"tono_threshold", encode_rational(r.tono_threshold)}};
  j["hirzebruch_bound"] = r.hirzebruch_bound ? Json(*r.hirzebruch_bound) : Json(nullptr);
  return j;
}

VerificationReport quartic_ledger_report() {
  VerificationReport rep;
  rep.claim = "quartic ledger: every case family has dimension at most 10 and the join stays proper";
  auto l = quartic_case_table();
  rep.data = ledger_json(l);
  RankCertificate c;
  c.kind = CertKind::Membership;
  c.claim = "row totals are the sums of their summands and the join bound is below the ambient dimension";
  c.detail = rep.data;
  c.recheck = [l]() {
    int best = 0;
    for (const auto& r : l.rows) {
      int s = 0;
      for (const auto& [name, v] : r.summands) s += v;
      if (s != r.total) return false;
      best = std::max(best, r.total);
    }
    return best == l.bound && l.join_bound == l.bound + l.surface_dim + 1 && l.join_is_proper();
  };
  rep.status = l.join_is_proper() ? ReportStatus::Verified : ReportStatus::Refuted;
  rep.certificates.push_back(std::move(c));
  return rep;
}

VerificationReport piene_report(std::uint64_t seed) {
  PieneData pd;
  auto rep = piene_verify(seed, &pd);
  rep.data["center"] = encode_point(pd.center);
  if (pd.curve) rep.data["curve"] = encode_curve(*pd.curve);
  rep.data["stalls"] = points_json(pd.stalls);
  rep.data["tangent_hits"] = points_json(pd.tangent_hits);
  rep.data["points"] = points_json(pd.points);
  return rep;
}

VerificationReport f1_report(int d, std::uint64_t seed) {
  auto rep = verify_claim2(d, {{0, 0, 0, 0, 1}, {0, 0, 0, 1, 1}}, seed);
  const F1Class y{1, d - 1};
  rep.data["intersections"] = {{"Y.H", f1_intersection(y, F1Class{1, 2})},
                               {"Y.C0", f1_intersection(y, F1Class{1, 0})},
                               {"Y.f", f1_intersection(y, F1Class{0, 1})}};
  rep.data["genus"] = f1_genus(y);
  rep.data["system_dimension"] = f1_system_dimension(y).dimension;
  rep.data["system_dimension_with_E"] = f1_system_dimension(y, d - 2).dimension;
  return rep;
}

int emit_report(const std::string& command, std::uint64_t seed, const VerificationReport& rep, std::ostream& out) {
  Json j = header(command, seed);
  j["report"] = rep.to_json();
  j["revalidated"] = rep.revalidate();
  out << j.dump(2) << "\n";
  if (!j["revalidated"].get<bool>()) return kUndecided;
  return exit_code(rep.status);
}

Rational rational_option(const std::string& s) { return Rational::parse(s); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact X-rank computations and certificate checks", "xrank"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  std::string form_path, curve_path, point_path, out_path;
  bool decompose = false;
  long d = 0, g = 0;
  int samples = 3;
  std::string a2s = "1/1", a3s = "1/1";

  auto* rb = app.add_subcommand("rank-binary", "Rank of a binary form");
  rb->add_option("--form", form_path, "polynomial JSON file")->required();
  rb->add_option("--seed", seed);
  auto* rc = app.add_subcommand("rank-cubic", "Rank of a ternary cubic");
  rc->add_option("--form", form_path, "polynomial JSON file")->required();
  rc->add_flag("--decompose", decompose, "also build the De Paolis scheme");
  rc->add_option("--seed", seed);
  auto* rp = app.add_subcommand("rank-curve-point", "Rank of a point with respect to a rational curve");
  rp->add_option("--curve", curve_path, "curve JSON file")->required();
  rp->add_option("--point", point_path, "point JSON file")->required();
  rp->add_option("--seed", seed);

  auto* ver = app.add_subcommand("verify", "Check one claim");
  ver->require_subcommand(1);
  auto* v_ii1 = ver->add_subcommand("ii1", "Numeric (d, g) routes");
  v_ii1->add_option("--d", d)->required();
  v_ii1->add_option("--g", g)->required();
  auto* v_ii0 = ver->add_subcommand("ii0", "Tangent contact and rank 3 for the normal form");
  v_ii0->add_option("--d", d)->required();
  v_ii0->add_option("--a2", a2s)->required();
  v_ii0->add_option("--a3", a3s)->required();
  v_ii0->add_option("--samples", samples)->check(CLI::Range(0, 64));
  v_ii0->add_option("--seed", seed);
  auto* v_piene = ver->add_subcommand("piene", "Projection of the rational normal quartic");
  v_piene->add_option("--seed", seed);
  auto* v_f1 = ver->add_subcommand("f1", "Curves on the cubic scroll");
  v_f1->add_option("--d", d)->required();
  v_f1->add_option("--seed", seed);
  auto* v_ql = ver->add_subcommand("quartic-ledger", "Dimension ledger for the quartic cases");

  auto* rep = app.add_subcommand("report", "Run the standard checks and write a combined report");
  rep->add_option("--out", out_path, "output JSON file")->required();
  rep->add_option("--seed", seed);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "xrank: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (rb->parsed()) {
      MPoly p = decode_polynomial(parse_json(read_file(form_path)));
      if (p.nvars() != 2 || p.is_zero() || !p.is_homogeneous()) throw InvalidInput("rank-binary: expected a nonzero binary form");
      auto [res, cert] = sylvester_rank(BinaryForm::from_mpoly(p), seed);
      Json j = header("rank-binary", seed);
      j["rank"] = res.rank;
      j["level"] = res.level;
      j["kernel_form"] = encode_point(res.kernel_form);
      j["squarefree"] = res.squarefree;
      if (!res.points.empty()) j["decomposition"] = {{"points", points_json(res.points)}, {"coefficients", encode_point(res.lambdas)}};
      j["certificate"] = cert.to_json();
      j["certificate_valid"] = cert.validate();
      out << j.dump(2) << "\n";
      return 0;
    }
    if (rc->parsed()) {
      MPoly p = decode_polynomial(parse_json(read_file(form_path)));
      if (p.nvars() != 3 || p.is_zero() || !p.is_homogeneous() || p.total_degree() != 3)
        throw InvalidInput("rank-cubic: expected a ternary cubic form");
      SymForm f(p);
      auto r = cubic_rank(f, seed);
      Json j = header("rank-cubic", seed);
      j["rank"] = r.rank ? Json(*r.rank) : Json(nullptr);
      j["route"] = r.route;
      if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
      j["certificate"] = r.cert.to_json();
      bool ok = !r.rank || r.cert.validate();
      j["certificate_valid"] = ok;
      int code = r.rank ? 0 : kUndecided;
      if (decompose) {
        try {
          SolveOptions opt;
          opt.seed = seed;
          auto dp = de_paolis_decompose(f, opt);
          Json nets = Json::array();
          for (const auto& n : dp.net) nets.push_back(encode_polynomial(n));
          Json tp = Json::array(), sp = Json::array();
          for (const auto& c : dp.triple_point) tp.push_back(upoly_to_json(c));
          for (const auto& c : dp.simple_point) sp.push_back(upoly_to_json(c));
          j["decomposition"] = {{"modulus", upoly_to_json(dp.modulus)},
                                {"triple_point", tp},
                                {"simple_point", sp},
                                {"net", nets},
                                {"certificate", dp.cert.to_json()},
                                {"certificate_valid", dp.cert.validate()}};
          ok = ok && dp.cert.validate();
        } catch (const UnsupportedInstance& e) {
          j["decomposition"] = {{"unsupported", e.what()}};
          code = kUndecided;
        } catch (const Undecided& e) {
          j["decomposition"] = {{"undecided", e.what()}};
          code = kUndecided;
        }
      }
      out << j.dump(2) << "\n";
      return ok ? code : kUndecided;
    }
    if (rp->parsed()) {
      RationalCurve c = decode_curve(parse_json(read_file(curve_path)));
      auto q = decode_point(parse_json(read_file(point_path)));
      if (static_cast<int>(q.size()) != c.ambient() + 1) throw InvalidInput("rank-curve-point: point and curve dimensions differ");
      SolveOptions opt;
      opt.seed = seed;
      auto r = curve_point_rank(c, q, opt);
      Json j = header("rank-curve-point", seed);
      j["rank"] = r.rank;
      j["certificate"] = r.cert.to_json();
      j["certificate_valid"] = r.cert.validate();
      out << j.dump(2) << "\n";
      return r.cert.validate() ? 0 : kUndecided;
    }
    if (v_ii1->parsed()) {
      Json j = header("verify ii1", seed);
      j.update(ii1_json(d, g));
      out << j.dump(2) << "\n";
      return 0;
    }
    if (v_ii0->parsed()) {
      if (d > 64) throw InvalidInput("verify ii0: d above 64 is not supported");
      return emit_report("verify ii0", seed, verify_ii0(static_cast<int>(d), rational_option(a2s), rational_option(a3s), samples, seed), out);
    }
    if (v_piene->parsed()) return emit_report("verify piene", seed, piene_report(seed), out);
    if (v_f1->parsed()) {
      if (d < 5 || d > 64) throw InvalidInput("verify f1: d must lie in [5, 64]");
      return emit_report("verify f1", seed, f1_report(static_cast<int>(d), seed), out);
    }
    if (v_ql->parsed()) return emit_report("verify quartic-ledger", seed, quartic_ledger_report(), out);
    if (rep->parsed()) {
      std::vector<std::pair<std::string, VerificationReport>> reps;
      reps.emplace_back("quartic-ledger", quartic_ledger_report());
      reps.emplace_back("ii0", verify_ii0(5, Rational(1), Rational(1), 3, seed));
      reps.emplace_back("piene", piene_report(seed));
      reps.emplace_back("f1", f1_report(5, seed));
      Json j = header("report", seed);
      Json table = Json::array();
      for (auto [dd, gg] : std::vector<std::pair<long, long>>{{4, 1}, {5, 0}, {6, 1}, {8, 1}, {9, 1}}) table.push_back(ii1_json(dd, gg));
      j["ii1"] = table;
      Json list = Json::array();
      int code = 0;
      for (const auto& [name, r] : reps) {
        bool valid = r.revalidate();
        list.push_back({{"name", name}, {"report", r.to_json()}, {"revalidated", valid}});
        int c = valid ? exit_code(r.status) : kUndecided;
        if (c == 1 || (c == kUndecided && code == 0)) code = c;
      }
      j["reports"] = list;
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw InvalidInput("cannot write '" + out_path + "'");
      f << j.dump(2) << "\n";
      Json summary = header("report", seed);
      summary["out"] = out_path;
      Json st = Json::object();
      for (const auto& [name, r] : reps) st[name] = to_string(r.status);
      summary["status"] = st;
      out << summary.dump(2) << "\n";
      return code;
    }
  } catch (const InvalidInput& e) {
    err << "xrank: invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const UnsupportedInstance& e) {
    err << "xrank: unsupported instance: " << e.what() << "\n";
    return kUndecided;
  } catch (const Undecided& e) {
    err << "xrank: undecided: " << e.what() << "\n";
    return kUndecided;
  }
  return kInvalid;
}

}  // namespace xrank::cli
