// towerlab: exact-arithmetic workbench for strength/rank computations on
// homogeneous forms and multilinear towers.
//
// Exit codes: 0 success, 1 mathematical failure (audit fail, verify
// failures), 2 inconclusive/budget exhausted, 3 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "towerlab/bounds.hpp"
#include "towerlab/io_tower.hpp"
#include "towerlab/prank.hpp"
#include "towerlab/regularize.hpp"
#include "towerlab/verify.hpp"

using namespace towerlab;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw DomainError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out.good()) throw DomainError("cannot open output file: " + out_path);
  out << content;
}

struct Options {
  std::string field = "Q";
  long budget = 200000;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out_path;
};

template <class Fn>
int with_field(const std::string& spec, Fn&& fn) {
  if (spec == "Q") {
    QField Q;
    return fn(Q);
  }
  if (spec.rfind("Fp:", 0) == 0) {
    long p = std::stol(spec.substr(3));
    if (p < 2 || p > (1L << 31)) throw DomainError("prime out of range in --field");
    FpField P(static_cast<std::uint32_t>(p));
    return fn(P);
  }
  throw DomainError("unknown field (use Q or Fp:<p>): " + spec);
}

ordered_json bound_json(const RankBound& b) {
  ordered_json j;
  j["lower"] = b.lower.str();
  j["upper"] = b.upper.str();
  j["exact"] = b.exact();
  j["trace"] = b.trace;
  return j;
}

std::string bound_text(const RankBound& b) {
  if (b.exact()) return "exact " + b.lower.str();
  std::string s = "bracket [" + b.lower.str() + ", " + b.upper.str() + "]";
  if (!b.certified) s += " (uncertified)";
  return s;
}

template <class F>
ordered_json audit_json(const F& field, const AuditReport<F>& rep) {
  ordered_json j;
  j["style"] = rep.threshold_style;
  j["overall"] = verdict_name(rep.overall);
  j["layers"] = ordered_json::array();
  for (const auto& l : rep.layers) {
    ordered_json lj;
    lj["degree"] = l.degree;
    lj["threshold"] = l.threshold.get_str();
    lj["strength"] = bound_json(l.bound);
    lj["verdict"] = verdict_name(l.verdict);
    j["layers"].push_back(lj);
  }
  return j;
}

int verdict_exit(Verdict v) {
  if (v == Verdict::pass) return 0;
  if (v == Verdict::fail) return 1;
  return 2;
}

ordered_json verify_json(const VerifyReport& rep) {
  ordered_json j;
  j["seed"] = rep.profile.seed;
  j["count"] = rep.profile.count;
  j["budget"] = rep.profile.budget_nodes;
  j["suites"] = ordered_json::array();
  for (const auto& s : rep.suites) {
    ordered_json sj;
    sj["name"] = s.name;
    sj["pass"] = s.count("pass");
    sj["fail"] = s.count("fail");
    sj["quarantined"] = s.count("quarantined");
    sj["inconclusive"] = s.count("inconclusive");
    sj["records"] = ordered_json::array();
    for (const auto& r : s.records) {
      ordered_json rj;
      rj["id"] = r.id;
      rj["status"] = r.status;
      if (!r.detail.empty()) rj["detail"] = r.detail;
      sj["records"].push_back(rj);
    }
    j["suites"].push_back(sj);
  }
  j["total_pass"] = rep.total("pass");
  j["total_fail"] = rep.total("fail");
  j["total_quarantined"] = rep.total("quarantined");
  j["total_inconclusive"] = rep.total("inconclusive");
  return j;
}

std::string verify_text(const VerifyReport& rep) {
  std::ostringstream os;
  os << "verify seed=" << rep.profile.seed << " count=" << rep.profile.count << "\n";
  os << "suite                pass  fail  quar  inc\n";
  for (const auto& s : rep.suites) {
    os << s.name;
    for (size_t k = s.name.size(); k < 21; ++k) os << ' ';
    os << s.count("pass") << "     " << s.count("fail") << "     " << s.count("quarantined")
       << "     " << s.count("inconclusive") << "\n";
    for (const auto& r : s.records)
      if (r.status == "fail") os << "  FAIL " << r.id << " " << r.detail << "\n";
  }
  os << "total: " << rep.total("pass") << " pass, " << rep.total("fail") << " fail, "
     << rep.total("quarantined") << " quarantined, " << rep.total("inconclusive")
     << " inconclusive\n";
  return os.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"towerlab: exact strength/rank workbench for forms and multilinear towers"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand

  Options opt;
  if (const char* env = std::getenv("TOWERLAB_BUDGET")) opt.budget = std::atol(env);
  app.add_option("--field", opt.field, "coefficient field: Q or Fp:<p>")->capture_default_str();
  app.add_option("--budget", opt.budget, "search/groebner step budget")->capture_default_str();
  app.add_option("--seed", opt.seed, "PRNG seed for verify")->capture_default_str();
  app.add_option("--format", opt.format, "output format: text or json")->capture_default_str();
  app.add_option("--out", opt.out_path, "write output to a file instead of stdout");

  std::string taylor_in;
  int taylor_m = 2;
  auto* cmd_taylor = app.add_subcommand("taylor", "multidegree decomposition of a form");
  cmd_taylor->add_option("input", taylor_in)->required();
  cmd_taylor->add_option("--m", taylor_m, "number of blocks")->required();

  std::string polarize_in;
  auto* cmd_polarize = app.add_subcommand("polarize", "symmetric multilinear form of a form");
  cmd_polarize->add_option("input", polarize_in)->required();

  std::string strength_in, strength_mod;
  auto* cmd_strength = app.add_subcommand("strength", "relative strength with certificate");
  cmd_strength->add_option("input", strength_in)->required();
  cmd_strength->add_option("--mod", strength_mod, "file of modulus forms");

  std::string prank_in, prank_mod, prank_collection;
  auto* cmd_prank = app.add_subcommand("prank", "partition rank of a multilinear form");
  cmd_prank->add_option("input", prank_in)->required();
  cmd_prank->add_option("--mod", prank_mod, "multilinear tower file as modulus");
  cmd_prank->add_option("--collection", prank_collection,
                        "admissible sets, e.g. \"1;1,2\" (default: all containing the least block)");

  std::string brank_in;
  auto* cmd_brank = app.add_subcommand("brank", "birch rank of a form system");
  cmd_brank->add_option("input", brank_in)->required();

  std::string grank_in, grank_mod;
  int grank_slot = -1;
  auto* cmd_grank = app.add_subcommand("grank", "geometric rank of a multilinear form");
  cmd_grank->add_option("input", grank_in)->required();
  cmd_grank->add_option("--mod", grank_mod, "multilinear tower file as modulus");
  cmd_grank->add_option("--slot", grank_slot, "distinguished block (default: min over all)");

  std::string reg_in;
  std::string reg_C = "1";
  long reg_D = 1, reg_r = 1;
  bool reg_odd = false;
  auto* cmd_reg = app.add_subcommand("regularize", "regularize forms into a strong tower");
  cmd_reg->add_option("input", reg_in)->required();
  cmd_reg->add_option("--C", reg_C)->required();
  cmd_reg->add_option("--D", reg_D)->required();
  cmd_reg->add_option("--r", reg_r)->required();
  cmd_reg->add_flag("--odd", reg_odd, "keep only odd-degree factors");

  std::string audit_in, audit_A = "1", audit_style = "definition";
  long audit_B = 1, audit_r = 0;
  auto* cmd_audit = app.add_subcommand("audit", "strongness audit of a tower");
  cmd_audit->add_option("input", audit_in)->required();
  cmd_audit->add_option("--A", audit_A)->required();
  cmd_audit->add_option("--B", audit_B)->required();
  cmd_audit->add_option("--r", audit_r)->required();
  cmd_audit->add_option("--style", audit_style, "definition or recursion");

  std::string clone_in, clone_mode = "external", clone_set;
  int clone_m = 2;
  auto* cmd_clone = app.add_subcommand("clone", "clone multilinear tower coordinates");
  cmd_clone->add_option("input", clone_in)->required();
  cmd_clone->add_option("--mode", clone_mode, "external or internal");
  cmd_clone->add_option("--set", clone_set, "blocks to clone, e.g. 2,3")->required();
  cmd_clone->add_option("--m", clone_m, "cloning degree")->required();

  std::string fix_in, fix_set, fix_at;
  auto* cmd_fix = app.add_subcommand("fix", "fix blocks of a multilinear tower at a point");
  cmd_fix->add_option("input", fix_in)->required();
  cmd_fix->add_option("--set", fix_set, "blocks to fix, e.g. 2,3")->required();
  cmd_fix->add_option("--at", fix_at, "coordinates per block, e.g. \"2:1,0;3:0,1\"")->required();

  std::string cc_a, cc_b;
  int cc_d = 3;
  auto* cmd_cc = app.add_subcommand("compare-collections", "compare two subset collections");
  cmd_cc->add_option("--d", cc_d)->required();
  cmd_cc->add_option("--a", cc_a, "e.g. \"1;1,2\"")->required();
  cmd_cc->add_option("--b", cc_b)->required();

  long bounds_d = 3, bounds_s = 1;
  std::vector<std::string> bounds_phi, bounds_assign;
  auto* cmd_bounds = app.add_subcommand("bounds", "explicit-constant pipeline report");
  cmd_bounds->add_option("--d", bounds_d)->required();
  cmd_bounds->add_option("--s", bounds_s)->required();
  cmd_bounds->add_option("--phi", bounds_phi, "entries like 2=4");
  cmd_bounds->add_option("--assign", bounds_assign, "entries like C_reg=1");

  int verify_count = 50;
  std::vector<std::string> verify_suites;
  auto* cmd_verify = app.add_subcommand("verify", "run the invariant suites");
  cmd_verify->add_option("--count", verify_count, "instances per suite")->capture_default_str();
  cmd_verify->add_option("--suite", verify_suites, "suite names (default all)");

  CLI11_PARSE(app, argc, argv);

  auto parse_user_set = [](const std::string& s) {
    std::set<int> out;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.insert(std::stoi(tok));
    return out;
  };
  auto parse_user_collection = [&](int d, const std::string& s) {
    std::vector<std::set<int>> sets;
    std::istringstream ss(s);
    std::string group;
    while (std::getline(ss, group, ';'))
      if (!group.empty()) sets.push_back(parse_user_set(group));
    return SubsetCollection::make(d, std::move(sets));
  };

  SearchBudget budget;
  budget.nodes = opt.budget;

  try {
    if (*cmd_taylor) {
      return with_field(opt.field, [&](const auto& field) {
        auto f = parse_form(field, read_file(taylor_in));
        auto comps = taylor_expand(field, f, taylor_m);
        std::string outstr;
        if (opt.format == "json") {
          ordered_json j = ordered_json::array();
          for (const auto& [e, comp] : comps) {
            ordered_json cj;
            cj["multidegree"] = e.e;
            cj["blocks"] = comp.blocks;
            cj["block_vars"] = comp.block_vars;
            cj["form"] = format_form(field, comp.underlying);
            j.push_back(cj);
          }
          outstr = j.dump(1) + "\n";
        } else {
          for (const auto& [e, comp] : comps) {
            outstr += "e=(";
            for (size_t i = 0; i < e.e.size(); ++i) outstr += (i ? "," : "") + std::to_string(e.e[i]);
            outstr += ") : " + format_blocked(field, comp);
          }
        }
        write_output(opt.out_path, outstr);
        return 0;
      });
    }
    if (*cmd_polarize) {
      return with_field(opt.field, [&](const auto& field) {
        auto f = parse_form(field, read_file(polarize_in));
        auto tilde = polarize(field, f);
        std::string outstr = "blocks " + std::to_string(f.degree()) + "\ndims";
        for (int k = 0; k < f.degree(); ++k) outstr += " " + std::to_string(f.nvars());
        outstr += "\n" + format_mlform(field, tilde);
        write_output(opt.out_path, outstr);
        return 0;
      });
    }
    if (*cmd_strength) {
      return with_field(opt.field, [&](const auto& field) {
        using F = std::decay_t<decltype(field)>;
        auto forms = parse_form_list(field, read_file(strength_in));
        if (forms.empty()) throw DomainError("no forms in input");
        std::vector<Form<F>> modulus;
        if (!strength_mod.empty())
          modulus = parse_form_list(field, read_file(strength_mod), forms[0].nvars());
        StrengthResult<F> res;
        if (forms.size() == 1) {
          res = strength(field, forms[0], modulus, budget);
        } else {
          auto coll = collective_strength(field, forms, modulus, budget);
          res.bound = coll.bound;
          res.certificate = coll.certificate;
        }
        std::string outstr;
        if (opt.format == "json") {
          ordered_json j;
          j["strength"] = bound_json(res.bound);
          if (res.certificate) j["certificate"] = format_certificate(field, *res.certificate);
          outstr = j.dump(1) + "\n";
        } else {
          outstr = bound_text(res.bound) + "\n";
          if (res.certificate) outstr += format_certificate(field, *res.certificate);
        }
        write_output(opt.out_path, outstr);
        return res.bound.exact() ? 0 : 2;
      });
    }
    if (*cmd_prank || *cmd_grank) {
      const bool is_prank = static_cast<bool>(*cmd_prank);
      return with_field(opt.field, [&](const auto& field) -> int {
        using F = std::decay_t<decltype(field)>;
        if constexpr (!F::is_finite) {
          throw DomainError("partition/geometric rank need a finite field (--field Fp:<p>)");
        } else {
          auto T = parse_mltower(field, read_file(is_prank ? prank_in : grank_in));
          if (T.layers.empty() || T.layers[0].forms.empty()) throw DomainError("no form in input");
          auto target = T.layers[0].forms[0];
          std::vector<MultilinearForm<F>> modulus;
          BlockSpace space = T.space;
          const std::string& modpath = is_prank ? prank_mod : grank_mod;
          if (!modpath.empty()) {
            auto M = parse_mltower(field, read_file(modpath));
            if (M.space.blocks() > space.blocks()) space = M.space;
            modulus = M.all_forms();
          }
          std::string outstr;
          if (is_prank) {
            std::optional<SubsetCollection> coll;
            if (!prank_collection.empty())
              coll = parse_user_collection(static_cast<int>(target.support.size()), prank_collection);
            auto res = partition_rank(field, space, target, coll, modulus, budget);
            if (opt.format == "json") {
              ordered_json j;
              j["partition_rank"] = bound_json(res.bound);
              j["pieces"] = ordered_json::array();
              for (const auto& p : res.pieces) {
                ordered_json pj;
                pj["I"] = p.I;
                pj["G"] = format_mlform(field, p.G);
                pj["H"] = format_mlform(field, p.H);
                j["pieces"].push_back(pj);
              }
              outstr = j.dump(1) + "\n";
            } else {
              outstr = bound_text(res.bound) + "\n";
              for (const auto& p : res.pieces) {
                outstr += "piece I={";
                for (size_t i = 0; i < p.I.size(); ++i) outstr += (i ? "," : "") + std::to_string(p.I[i]);
                outstr += "}\n" + format_mlform(field, p.G) + format_mlform(field, p.H);
              }
            }
            write_output(opt.out_path, outstr);
            return res.bound.exact() ? 0 : 2;
          }
          auto res = geometric_rank(field, space, target, modulus, grank_slot, opt.budget);
          if (opt.format == "json") {
            ordered_json j;
            j["geometric_rank"] = bound_json(res);
            outstr = j.dump(1) + "\n";
          } else {
            outstr = bound_text(res) + "\n";
          }
          write_output(opt.out_path, outstr);
          return res.exact() ? 0 : 2;
        }
      });
    }
    if (*cmd_brank) {
      return with_field(opt.field, [&](const auto& field) {
        auto forms = parse_form_list(field, read_file(brank_in));
        auto res = birch_rank(field, forms, opt.budget);
        std::string outstr;
        if (opt.format == "json") {
          ordered_json j;
          j["birch_rank"] = bound_json(res);
          outstr = j.dump(1) + "\n";
        } else {
          outstr = bound_text(res) + "\n";
        }
        write_output(opt.out_path, outstr);
        return res.exact() ? 0 : 2;
      });
    }
    if (*cmd_reg) {
      return with_field(opt.field, [&](const auto& field) -> int {
        using F = std::decay_t<decltype(field)>;
        if constexpr (!F::is_finite) {
          throw DomainError("regularize needs exact strength decisions (--field Fp:<p>)");
        } else {
          auto forms = parse_form_list(field, read_file(reg_in));
          SearchBudget finder = budget;
          finder.max_r = 2;
          auto res = regularize(field, forms, mpq_class(reg_C), reg_D, reg_r, reg_odd, finder);
          ordered_json trace = ordered_json::array();
          for (size_t si = 0; si < res.trace.steps.size(); ++si) {
            const auto& st = res.trace.steps[si];
            ordered_json sj;
            sj["step"] = si;
            sj["layer_degree"] = st.layer_degree;
            sj["pivot"] = st.form_index;
            std::vector<std::string> combo;
            for (const auto& c : st.combo) combo.push_back(field.to_string(c));
            sj["combo"] = combo;
            sj["pieces"] = ordered_json::array();
            for (const auto& [p, q] : st.pieces) {
              ordered_json pj;
              pj["p"] = format_form(field, p);
              pj["q"] = format_form(field, q);
              sj["pieces"].push_back(pj);
            }
            if (!st.ideal_witness.is_zero()) sj["witness"] = format_form(field, st.ideal_witness);
            trace.push_back(sj);
          }
          std::string outstr;
          if (opt.format == "json") {
            ordered_json j;
            j["tower"] = format_tower(field, res.tower);
            j["trace"] = trace;
            j["containment"] = res.trace.containment_verified;
            j["size_within_bound"] = res.trace.size_within_bound;
            j["audit"] = audit_json(field, res.final_audit);
            outstr = j.dump(1) + "\n";
          } else {
            outstr = format_tower(field, res.tower);
            outstr += "steps " + std::to_string(res.trace.steps.size()) + "\n";
            outstr +=
                "containment " + std::string(res.trace.containment_verified ? "ok" : "FAILED") + "\n";
            outstr += "size-bound " + std::string(res.trace.size_within_bound ? "ok" : "FAILED") + "\n";
            outstr += "audit(" + res.final_audit.threshold_style + ") " +
                      verdict_name(res.final_audit.overall) + "\n";
          }
          write_output(opt.out_path, outstr);
          if (!res.trace.containment_verified || res.final_audit.overall == Verdict::fail) return 1;
          if (res.trace.budget_exhausted) return 2;
          return verdict_exit(res.final_audit.overall);
        }
      });
    }
    if (*cmd_audit) {
      return with_field(opt.field, [&](const auto& field) -> int {
        using F = std::decay_t<decltype(field)>;
        auto T = parse_tower(field, read_file(audit_in));
        AuditReport<F> rep;
        if (audit_style == "recursion") {
          int maxdeg = 0;
          for (const auto& l : T.layers()) maxdeg = std::max(maxdeg, l.degree);
          std::vector<long> profile(maxdeg, 0);
          for (const auto& l : T.layers()) profile[l.degree - 1] = static_cast<long>(l.forms.size());
          auto n = predicted_size(profile, mpq_class(audit_A), audit_B);
          rep = audit_strength_recursion(field, T, mpq_class(audit_A), audit_B, n, budget);
        } else {
          rep = audit_strength(field, T, StrongnessParams(mpq_class(audit_A), audit_B, audit_r), budget);
        }
        std::string outstr;
        if (opt.format == "json") {
          outstr = audit_json(field, rep).dump(1) + "\n";
        } else {
          outstr = "audit(" + rep.threshold_style + ") " + verdict_name(rep.overall) + "\n";
          for (const auto& l : rep.layers)
            outstr += "layer deg " + std::to_string(l.degree) + ": threshold " +
                      l.threshold.get_str() + ", strength " + bound_text(l.bound) + ", " +
                      verdict_name(l.verdict) + "\n";
        }
        write_output(opt.out_path, outstr);
        return verdict_exit(rep.overall);
      });
    }
    if (*cmd_clone) {
      return with_field(opt.field, [&](const auto& field) {
        auto T = parse_mltower(field, read_file(clone_in));
        auto I = parse_user_set(clone_set);
        std::string outstr;
        if (clone_mode == "external") {
          auto res = clone_external(T, I, clone_m);
          outstr = format_mltower(field, res.tower);
          outstr += "# relabel table (copy: original -> block)\n";
          for (size_t c = 0; c < res.relabel.size(); ++c)
            for (const auto& [from, to] : res.relabel[c])
              outstr += "# copy " + std::to_string(c + 1) + ": " + std::to_string(from) + " -> " +
                        std::to_string(to) + "\n";
        } else if (clone_mode == "internal") {
          outstr = format_mltower(field, clone_internal(T, I, clone_m));
        } else {
          throw DomainError("clone mode must be external or internal");
        }
        write_output(opt.out_path, outstr);
        return 0;
      });
    }
    if (*cmd_fix) {
      return with_field(opt.field, [&](const auto& field) {
        using F = std::decay_t<decltype(field)>;
        auto T = parse_mltower(field, read_file(fix_in));
        auto I = parse_user_set(fix_set);
        std::map<int, std::vector<typename F::Elem>> at;
        std::istringstream ss(fix_at);
        std::string group;
        while (std::getline(ss, group, ';')) {
          auto colon = group.find(':');
          if (colon == std::string::npos) throw DomainError("--at entries look like 2:1,0");
          int block = std::stoi(group.substr(0, colon));
          std::vector<typename F::Elem> coords;
          std::istringstream cs(group.substr(colon + 1));
          std::string tok;
          while (std::getline(cs, tok, ',')) coords.push_back(field.from_int(std::stol(tok)));
          at[block] = std::move(coords);
        }
        auto res = fix_coordinates(field, T, I, at);
        std::string outstr = format_mltower(field, res.tower);
        for (const auto& w : res.warnings) outstr += "# warning: " + w + "\n";
        write_output(opt.out_path, outstr);
        return 0;
      });
    }
    if (*cmd_cc) {
      auto a = parse_user_collection(cc_d, cc_a);
      auto b = parse_user_collection(cc_d, cc_b);
      auto rel = collection_compare(a, b);
      std::string name = rel == CollectionOrder::less      ? "less"
                         : rel == CollectionOrder::equal   ? "equal"
                         : rel == CollectionOrder::greater ? "greater"
                                                           : "incomparable";
      write_output(opt.out_path, name + "\n");
      return 0;
    }
    if (*cmd_bounds) {
      std::map<long, mpq_class> phi;
      for (const auto& e : bounds_phi) {
        auto eq = e.find('=');
        if (eq == std::string::npos) throw DomainError("--phi entries look like 2=4");
        phi[std::stol(e.substr(0, eq))] = mpq_class(e.substr(eq + 1));
      }
      std::map<std::string, mpq_class> assign;
      for (const auto& e : bounds_assign) {
        auto eq = e.find('=');
        if (eq == std::string::npos) throw DomainError("--assign entries look like NAME=VALUE");
        assign[e.substr(0, eq)] = mpq_class(e.substr(eq + 1));
      }
      auto rep = pipeline_bound(bounds_d, bounds_s, phi, assign);
      std::string outstr;
      if (opt.format == "json") {
        ordered_json j;
        j["d"] = rep.d;
        j["s"] = rep.s;
        j["replay_ok"] = replay_pipeline(rep);
        j["steps"] = ordered_json::array();
        for (const auto& st : rep.steps) {
          ordered_json sj;
          sj["id"] = st.id;
          sj["formula"] = st.formula;
          sj["inputs"] = ordered_json::object();
          for (const auto& [k, v] : st.inputs) sj["inputs"][k] = v.text;
          sj["output"] = st.output.text;
          sj["numeric"] = st.output.is_number();
          if (!st.note.empty()) sj["note"] = st.note;
          j["steps"].push_back(sj);
        }
        outstr = j.dump(1) + "\n";
      } else {
        for (const auto& st : rep.steps)
          outstr += st.id + ": " + st.output.text + (st.note.empty() ? "" : "  [" + st.note + "]") + "\n";
      }
      write_output(opt.out_path, outstr);
      return 0;
    }
    if (*cmd_verify) {
      VerifyProfile profile;
      profile.seed = opt.seed;
      profile.count = verify_count;
      profile.budget_nodes = opt.budget;
      profile.suites = verify_suites;
      auto rep = run_verify(profile);
      std::string outstr = opt.format == "json" ? verify_json(rep).dump(1) + "\n" : verify_text(rep);
      write_output(opt.out_path, outstr);
      return rep.total("fail") > 0 ? 1 : 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const BudgetExhausted& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
