// Command-line front end: computations, fixtures, and the verification
// suites. All output is deterministic; --format selects text or JSON.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qw/charalg.hpp"
#include "qw/demazure.hpp"
#include "qw/errors.hpp"
#include "qw/jfun.hpp"
#include "qw/toda.hpp"
#include "qw/verify.hpp"

namespace {

using ojson = nlohmann::ordered_json;
using namespace qw;

std::vector<int> parse_csv_ints(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

std::string resolve_fixture(const std::string& name) {
  namespace fs = std::filesystem;
  if (fs::exists(name)) return name;
  fs::path in_dir = fs::path(default_fixture_dir()) / name;
  if (fs::exists(in_dir)) return in_dir.string();
  throw SchemaError("fixture '" + name + "' not found");
}

ojson laurent_json(const LaurentPoly& p) {
  ojson out = ojson::array();
  for (const auto& [w, c] : p.terms()) out.push_back(ojson::array({w.k, w.mu, rat_to_string(c)}));
  return out;
}

ojson rc_json(const RationalCharacter& a) {
  ojson out;
  out["num"] = laurent_json(a.num);
  out["den"] = ojson::array();
  for (const auto& w : a.den) out["den"].push_back(ojson::array({w.k, w.mu}));
  return out;
}

ojson folding_json(const FoldingDatum& F) {
  ojson out;
  out["type"] = F.name;
  out["rank"] = F.rank;
  out["d"] = F.d;
  ojson i0 = ojson::array(), i1 = ojson::array();
  for (int i : F.I0) i0.push_back(i + 1);
  for (int i : F.I1) i1.push_back(i + 1);
  out["I0"] = i0;
  out["I1"] = i1;
  out["d_i"] = F.d_i;
  out["cartan"] = F.cartan;
  out["pairing"] = F.pairing;
  ojson parent;
  parent["rank"] = F.parent_rank;
  ojson edges = ojson::array();
  for (int p = 0; p < F.parent_rank; ++p)
    for (int r = p + 1; r < F.parent_rank; ++r)
      if (F.parent_adj[p][r]) edges.push_back(ojson::array({p + 1, r + 1}));
  parent["edges"] = edges;
  ojson perm = ojson::array();
  for (int p : F.parent_perm) perm.push_back(p + 1);
  parent["sigma"] = perm;
  ojson orbit = ojson::array();
  for (int i : F.orbit_of) orbit.push_back(i + 1);
  parent["orbit"] = orbit;
  out["parent"] = parent;
  out["a_matrix"] = F.a_matrix;
  return out;
}

int report_results(const std::vector<CheckResult>& results, const std::string& format) {
  int failures = 0;
  if (format == "json") {
    ojson out = ojson::array();
    for (const auto& r : results) {
      ojson jr;
      jr["name"] = r.name;
      jr["status"] = r.skipped ? "skip" : (r.pass ? "pass" : "fail");
      jr["detail"] = r.detail;
      out.push_back(jr);
      if (!r.skipped && !r.pass) ++failures;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      const char* status = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
      if (!r.skipped && !r.pass) ++failures;
      std::cout << status << "  " << r.name;
      if (!r.detail.empty()) std::cout << " -- " << r.detail;
      std::cout << "\n";
    }
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact characters of twisted zastava spaces, q-Whittaker functions, and q-Toda chains"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  // fold
  auto* fold = app.add_subcommand("fold", "Print the folded root system data");
  fold->fallthrough();
  std::string fold_type;
  fold->add_option("--type", fold_type, "Dynkin label, e.g. C2")->required();

  // jfun
  auto* jf = app.add_subcommand("jfun", "Solve the fermionic recurrence");
  jf->fallthrough();
  std::string jf_type, jf_alpha;
  int jf_series = -1;
  jf->add_option("--type", jf_type)->required();
  jf->add_option("--alpha", jf_alpha, "Degree, comma separated")->required();
  jf->add_option("--series", jf_series, "Also print the q-adic expansion to this degree");

  // hilbert
  auto* hb = app.add_subcommand("hilbert", "Characters of weighted presentations");
  hb->fallthrough();
  std::string hb_fixture;
  int hb_degree = -1;
  bool hb_closed = false;
  hb->add_option("--fixture", hb_fixture)->required();
  hb->add_option("--degree", hb_degree, "Degreewise dimensions up to this q-degree");
  hb->add_flag("--closed-form", hb_closed, "Hypersurface closed form");

  // demazure
  auto* dz = app.add_subcommand("demazure", "Twisted Demazure characters");
  dz->fallthrough();
  std::string dz_type, dz_lambda;
  bool dz_hat = false, dz_global = false;
  dz->add_option("--type", dz_type)->required();
  dz->add_option("--lambda", dz_lambda, "Dominant weight, comma separated")->required();
  dz->add_flag("--hat", dz_hat, "Local character (default)");
  dz->add_flag("--global", dz_global, "Global character");

  // toda
  auto* toda = app.add_subcommand("toda", "Lattice q-difference Toda");
  toda->fallthrough();
  std::string toda_mode, toda_op;
  int toda_box = 3;
  toda->add_option("mode", toda_mode, "check or solve")
      ->required()
      ->check(CLI::IsMember({"check", "solve"}));
  toda->add_option("--op", toda_op, "Operator config JSON")->required();
  toda->add_option("--box", toda_box, "Dominance-height bound");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->fallthrough();
  std::string suite;
  verify->add_option("--suite", suite, "main, weights, whittaker, or corollary")
      ->required()
      ->check(CLI::IsMember({"main", "weights", "whittaker", "corollary"}));

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string fixture_dir = default_fixture_dir();

    if (*fold) {
      FoldingDatum F = build_folding(fold_type);
      if (format == "json") {
        std::cout << folding_json(F).dump(2) << "\n";
      } else {
        std::cout << F.name << ": d = " << F.d << "\n";
        auto print_set = [&](const char* name, const std::vector<int>& s) {
          std::cout << name << " = {";
          for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? "," : "") << s[i] + 1;
          std::cout << "}\n";
        };
        print_set("I0", F.I0);
        print_set("I1", F.I1);
        std::cout << "cartan:\n";
        for (const auto& row : F.cartan) {
          std::cout << " ";
          for (int v : row) std::cout << " " << v;
          std::cout << "\n";
        }
        std::cout << "a-map columns (parent coefficients):\n";
        for (int i = 0; i < F.rank; ++i) {
          std::cout << "  a(alpha_" << i + 1 << ") =";
          for (int p = 0; p < F.parent_rank; ++p) std::cout << " " << F.a_matrix[p][i];
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (*jf) {
      FoldingDatum F = build_folding(jf_type);
      RootVector alpha = parse_csv_ints(jf_alpha);
      if (static_cast<int>(alpha.size()) != F.rank) throw SchemaError("alpha length mismatch");
      RationalCharacter J = compute_J(F, alpha);
      if (format == "json") {
        ojson out = rc_json(J);
        if (jf_series >= 0) out["series"] = laurent_json(series_expand(J, jf_series));
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << rc_text(J) << "\n";
        if (jf_series >= 0)
          std::cout << "series(" << jf_series << ") = " << laurent_text(series_expand(J, jf_series))
                    << "\n";
      }
      return 0;
    }

    if (*hb) {
      WeightedPresentation P = load_presentation(resolve_fixture(hb_fixture));
      if (hb_closed) {
        RationalCharacter hs = hypersurface_series(P);
        if (format == "json") {
          std::cout << rc_json(hs).dump(2) << "\n";
        } else {
          std::cout << rc_text(hs) << "\n";
        }
        return 0;
      }
      const int N = hb_degree >= 0 ? hb_degree : 6;
      auto dims = graded_hilbert_function(P, N);
      if (format == "json") {
        ojson out = ojson::array();
        for (const auto& [w, dim] : dims)
          out.push_back(ojson::array({w.k, w.mu, dim}));
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& [w, dim] : dims)
          std::cout << monomial_text(w, " ") << ": " << dim << "\n";
      }
      return 0;
    }

    if (*dz) {
      FoldingDatum F = build_folding(dz_type);
      AffineData A = build_affine(F);
      WeightVector lambda = parse_csv_ints(dz_lambda);
      if (static_cast<int>(lambda.size()) != F.rank) throw SchemaError("lambda length mismatch");
      if (!is_dominant(lambda)) throw SchemaError("lambda must be dominant");
      LaurentPoly psi_hat = demazure_character(A, lambda);
      if (dz_global) {
        RationalCharacter psi = global_weyl_character(F, psi_hat, lambda);
        std::cout << (format == "json" ? rc_json(psi).dump(2) : rc_text(psi)) << "\n";
      } else {
        std::cout << (format == "json" ? laurent_json(psi_hat).dump(2) : laurent_text(psi_hat))
                  << "\n";
      }
      return 0;
    }

    if (*toda) {
      std::ifstream in(resolve_fixture(toda_op));
      std::stringstream ss;
      ss << in.rdbuf();
      auto j = nlohmann::json::parse(ss.str());
      FoldingDatum F = build_folding(j.value("type", std::string()));
      DifferenceOperator op = parse_operator(ss.str(), F);
      WhittakerTable table = solve_whittaker(F, op, toda_box);
      if (toda_mode == "solve") {
        if (format == "json") {
          ojson out = ojson::array();
          for (const auto& [lambda, psi] : table.entries) {
            ojson e;
            e["lambda"] = lambda;
            e["psi"] = rc_json(psi);
            out.push_back(e);
          }
          std::cout << out.dump(2) << "\n";
        } else {
          for (const auto& [lambda, psi] : table.entries) {
            std::cout << "Psi(";
            for (std::size_t i = 0; i < lambda.size(); ++i)
              std::cout << (i ? "," : "") << lambda[i];
            std::cout << ") = " << rc_text(psi) << "\n";
          }
        }
        return 0;
      }
      // check: the solve already re-verifies; report residual status per point.
      int up_h = 0;
      for (const auto& t : op.terms) {
        int h = 0;
        for (int s : t.shift) h += s;
        up_h = std::max(up_h, h);
      }
      EigenReport rep = eigencheck(op, table, toda_box - up_h);
      std::vector<CheckResult> rs;
      CheckResult r;
      r.name = "eigencheck box " + std::to_string(rep.box);
      r.pass = rep.pass;
      if (!rep.pass) {
        r.detail = "residuals at";
        for (const auto& mu : rep.failures) {
          r.detail += " (";
          for (std::size_t i = 0; i < mu.size(); ++i)
            r.detail += (i ? "," : "") + std::to_string(mu[i]);
          r.detail += ")";
        }
      }
      rs.push_back(r);
      return report_results(rs, format);
    }

    if (*verify) {
      std::vector<CheckResult> results;
      if (suite == "main") results = suite_main(fixture_dir);
      if (suite == "weights") results = suite_weights();
      if (suite == "whittaker") results = suite_whittaker(fixture_dir);
      if (suite == "corollary") results = suite_corollary(fixture_dir);
      return report_results(results, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
