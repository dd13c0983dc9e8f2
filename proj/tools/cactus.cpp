// cactus: presentations, finite quotients and lower central series of the
// cactus groups J_n, verified by coset enumeration and permutation-group
// computations.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "cactus/hom.hpp"
#include "cactus/intmat.hpp"
#include "cactus/perm_group.hpp"
#include "cactus/verify.hpp"

using namespace cactus;

namespace {

struct GlobalOpts {
  bool json = false;
  std::int64_t max_cosets = 0;
  std::string strategy = "hlt";
  int threads = 1;

  EnumConfig tc() const {
    EnumConfig cfg;
    cfg.max_cosets = max_cosets;
    cfg.strategy = strategy == "felsch" ? TcStrategy::felsch : TcStrategy::hlt;
    return cfg;
  }
  VerifyConfig verify(bool stretch = false) const {
    VerifyConfig v;
    v.tc = tc();
    v.threads = threads;
    v.stretch = stretch;
    return v;
  }
};

Presentation build_pres(const std::string& kind, int n, int cls) {
  if (kind == "standard") return standard_cactus(n);
  if (kind == "minimal") return minimal_cactus(n);
  if (kind == "thmd") return thmd_quotient(n);
  if (kind == "trunc") return class_truncate(minimal_cactus(n), cls);
  throw CLI::ValidationError("--pres must be one of standard|minimal|thmd|trunc");
}

// thmd:4 / minimal:5 / trunc:4:3
Presentation parse_pres_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else
      cur += c;
  }
  parts.push_back(cur);
  if (parts.size() < 2) throw CLI::ValidationError("presentation spec needs kind:n");
  int n = std::stoi(parts[1]);
  int cls = parts.size() > 2 ? std::stoi(parts[2]) : 1;
  return build_pres(parts[0], n, cls);
}

FiniteGroupTable parse_group_spec(const std::string& spec) {
  if (spec == "wreath") return wreath_group();
  if (spec == "z2xwreath") return direct_product(cyclic_table(2), wreath_group());
  if (spec == "klein") return klein_table();
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string kind = spec.substr(0, colon);
    int m = std::stoi(spec.substr(colon + 1));
    if (kind == "cyclic") return cyclic_table(m);
    if (kind == "dihedral") return dihedral_table(m);
  }
  throw CLI::ValidationError("group spec must be wreath|z2xwreath|klein|cyclic:M|dihedral:M");
}

int emit_manifest(const RunManifest& m, const GlobalOpts& g) {
  if (g.json)
    std::cout << m.to_json().dump(2) << "\n";
  else
    std::cout << m.summary();
  return m.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"presentations, quotients and lower central series of cactus groups"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--max-cosets", g.max_cosets, "coset cap (default: CACTUS_MAX_COSETS or 2^20)");
  app.add_option("--strategy", g.strategy, "hlt|felsch")->check(CLI::IsMember({"hlt", "felsch"}));
  app.add_option("--threads", g.threads, "worker threads for independent cells");

  // present
  auto* present = app.add_subcommand("present", "emit a presentation");
  std::string pres_kind = "minimal";
  int pres_n = 4, pres_class = 1;
  std::string emit = "gap";
  present->add_option("--pres", pres_kind, "standard|minimal|thmd|trunc");
  present->add_option("-n", pres_n, "order parameter")->required();
  present->add_option("--class", pres_class, "truncation class (trunc only)");
  present->add_option("--emit", emit, "gap|json")->check(CLI::IsMember({"gap", "json"}));

  // counts
  auto* counts = app.add_subcommand("counts", "closed-form vs enumerated presentation sizes");
  int counts_from = 2, counts_to = 12;
  bool counts_csv = false;
  counts->add_option("--from", counts_from, "first order");
  counts->add_option("--to", counts_to, "last order");
  counts->add_option("-n", counts_to, "single order (sets from = to)");
  counts->add_flag("--csv", counts_csv, "CSV output");

  // hom check
  auto* hom = app.add_subcommand("hom", "homomorphism checks");
  auto* hom_chk = hom->add_subcommand("check", "evaluate all relators under a named map");
  std::string map_name;
  int hom_n = 0, hom_pivot = -1, hom_target_m = 0;
  hom_chk->add_option("--map", map_name, "pi|pi-standard|phi-d4|psi-d8|phi-inf|theta|theta-lambda|qn")
      ->required();
  hom_chk->add_option("-n", hom_n, "order parameter");
  hom_chk->add_option("--pivot", hom_pivot, "pivot override (psi-d8)");
  hom_chk->add_option("--target-m", hom_target_m, "target dihedral order (factorization maps)");

  // order
  auto* order = app.add_subcommand("order", "coset enumeration over the trivial subgroup");
  std::string order_kind = "thmd", dump_csv;
  int order_n = 4, order_class = 2;
  order->add_option("--pres", order_kind, "standard|minimal|thmd|trunc");
  order->add_option("-n", order_n, "order parameter")->required();
  order->add_option("--class", order_class, "truncation class (trunc only)");
  order->add_option("--dump-csv", dump_csv, "write the coset table as CSV to this file");

  // lcs
  auto* lcs = app.add_subcommand("lcs", "lower central series of a finite quotient");
  std::string lcs_kind = "trunc";
  int lcs_n = 4, lcs_class = 2;
  lcs->add_option("--pres", lcs_kind, "standard|minimal|thmd|trunc");
  lcs->add_option("-n", lcs_n, "order parameter")->required();
  lcs->add_option("--class", lcs_class, "truncation class (trunc only)");

  // iso
  auto* iso = app.add_subcommand("iso", "presentation vs concrete group isomorphism");
  std::string iso_left, iso_right;
  iso->add_option("--left", iso_left, "presentation spec, e.g. thmd:4")->required();
  iso->add_option("--right", iso_right, "group spec, e.g. wreath")->required();

  // abelianize
  auto* ab = app.add_subcommand("abelianize", "invariant factors of a presentation");
  std::string ab_kind = "minimal";
  int ab_n = 4, ab_class = 1;
  ab->add_option("--pres", ab_kind, "standard|minimal|thmd|trunc");
  ab->add_option("-n", ab_n, "order parameter")->required();
  ab->add_option("--class", ab_class, "truncation class (trunc only)");

  // table
  auto* table = app.add_subcommand("table", "layer-rank table with adjudications");
  std::vector<int> table_ns{4, 5, 6};
  int table_max_class = 3;
  bool table_stretch = false;
  table->add_option("--n", table_ns, "orders to tabulate")->delimiter(',');
  table->add_option("--max-class", table_max_class, "deepest layer index");
  table->add_flag("--stretch", table_stretch, "also run the cap-governed deep cells");

  // verify-all
  auto* verify = app.add_subcommand("verify-all", "run the whole claim suite");
  int verify_n = 6;
  bool verify_stretch = false;
  verify->add_option("-n", verify_n, "bound for the expensive claims (default 6)");
  verify->add_flag("--stretch", verify_stretch, "also run the cap-governed deep cells");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*present) {
      Presentation p = build_pres(pres_kind, pres_n, pres_class);
      if (emit == "json" || g.json)
        std::cout << p.to_json().dump(2) << "\n";
      else
        std::cout << p.to_gap() << "\n";
      return 0;
    }

    if (*counts) {
      if (counts->count("-n") && !counts->count("--from")) counts_from = counts_to;
      if (counts_csv) std::cout << CountReport::csv_header() << "\n";
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      bool all_ok = true;
      for (int n = counts_from; n <= counts_to; ++n) {
        CountReport r = counts_closed_form(n);
        all_ok = all_ok && r.consistent();
        if (counts_csv)
          std::cout << r.csv_row() << "\n";
        else if (g.json)
          rows.push_back({{"n", r.n},
                          {"G", r.gens_standard},
                          {"R", r.rels_standard},
                          {"Gt", r.gens_minimal},
                          {"Rt", r.rels_minimal},
                          {"consistent", r.consistent()}});
        else
          std::cout << "n=" << n << "  G=" << r.gens_standard << " R=" << r.rels_standard
                    << " Gt=" << r.gens_minimal << " Rt=" << r.rels_minimal
                    << (r.consistent() ? "" : "  MISMATCH") << "\n";
      }
      if (g.json && !counts_csv) std::cout << rows.dump(2) << "\n";
      return all_ok ? 0 : 1;
    }

    if (*hom_chk) {
      CheckReport rep;
      if (map_name == "qn") {
        rep = qn_consequence_check(hom_n);
      } else if (map_name == "dihedral-factorization") {
        GroupHom h = dihedral_factorization(hom_n, hom_target_m > 0 ? hom_target_m : 4);
        rep = hom_check(h);
      } else {
        GroupHom h = map_name == "pi"            ? pi_minimal(hom_n)
              : map_name == "pi-standard"  ? pi_standard(hom_n)
              : map_name == "phi-d4"       ? phi_d4(hom_n)
              : map_name == "psi-d8"       ? psi_d8(hom_n, hom_pivot)
              : map_name == "phi-inf"      ? phi_inf(hom_n)
              : map_name == "theta"        ? theta()
              : map_name == "theta-lambda" ? theta_lambda(hom_n)
                                           : throw CLI::ValidationError("unknown --map");
        rep = hom_check(h);
      }
      if (g.json)
        std::cout << rep.to_json().dump(2) << "\n";
      else {
        std::cout << rep.map << " n=" << rep.n << ": " << (rep.passed ? "passes" : "FAILS") << "\n";
        for (const CheckFailure& f : rep.failures)
          std::cout << "  relator " << f.relator << " -> " << f.image << "\n";
      }
      return rep.passed ? 0 : 1;
    }

    if (*order) {
      Presentation p = build_pres(order_kind, order_n, order_class);
      CosetTable t = todd_coxeter(p, {}, g.tc());
      if (!dump_csv.empty() && t.status == CosetTable::Status::complete) {
        std::ofstream out(dump_csv);
        out << t.to_csv(p);
      }
      if (g.json) {
        nlohmann::ordered_json j = {
            {"pres", p.family().str()},
            {"status", t.status == CosetTable::Status::complete ? "complete" : "capped"},
            {"index", t.index},
            {"defined", t.stats.defined},
            {"deleted", t.stats.deleted}};
        std::cout << j.dump(2) << "\n";
      } else if (t.status == CosetTable::Status::complete) {
        std::cout << p.family().str() << ": order " << t.index << "\n";
      } else {
        std::cout << p.family().str() << ": capped (live " << t.index << ", defined "
                  << t.stats.defined << ", deleted " << t.stats.deleted << ")\n";
      }
      return t.status == CosetTable::Status::complete ? 0 : 2;
    }

    if (*lcs) {
      Presentation p = build_pres(lcs_kind, lcs_n, lcs_class);
      CosetTable t = todd_coxeter(p, {}, g.tc());
      if (t.status != CosetTable::Status::complete) {
        std::cerr << "enumeration capped; raise --max-cosets\n";
        return 2;
      }
      FiniteGroupTable rep = regular_representation(t, p);
      PermGroup grp(rep.degree(), rep.generators());
      LcsReport r = lower_central_series(grp);
      nlohmann::ordered_json j = {{"pres", p.family().str()},
                                  {"orders", r.orders},
                                  {"ranks", r.ranks},
                                  {"elementary", r.elementary},
                                  {"reaches_trivial", r.reaches_trivial}};
      if (g.json)
        std::cout << j.dump(2) << "\n";
      else {
        std::cout << p.family().str() << " lower central series orders:";
        for (auto o : r.orders) std::cout << " " << o;
        std::cout << "\nlayer ranks:";
        for (auto rk : r.ranks) std::cout << " " << rk;
        std::cout << "\n";
      }
      return 0;
    }

    if (*iso) {
      Presentation p = parse_pres_spec(iso_left);
      FiniteGroupTable h = parse_group_spec(iso_right);
      IsoResult r = isomorphic(p, h, g.tc());
      if (g.json) {
        nlohmann::ordered_json j = {{"left", p.family().str()},
                                    {"right", h.name()},
                                    {"isomorphic", r.isomorphic}};
        if (r.isomorphic) {
          nlohmann::ordered_json wit = nlohmann::ordered_json::array();
          for (const Perm& w : r.witness) wit.push_back(w.to_cycles());
          j["witness"] = wit;
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (r.isomorphic ? "isomorphic" : "not isomorphic") << "\n";
        for (std::size_t i = 0; i < r.witness.size(); ++i)
          std::cout << "  " << p.alphabet().name(p.alphabet().gen_of_col(static_cast<int>(i)))
                    << " -> " << r.witness[i].to_cycles() << "\n";
      }
      return 0;
    }

    if (*ab) {
      Presentation p = build_pres(ab_kind, ab_n, ab_class);
      AbelianInvariants inv = abelianization(p);
      if (g.json) {
        nlohmann::ordered_json factors = nlohmann::ordered_json::array();
        for (const BigInt& d : inv.torsion) factors.push_back(d.str());
        nlohmann::ordered_json j = {{"pres", p.family().str()},
                                    {"torsion", factors},
                                    {"free_rank", inv.free_rank}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << p.family().str() << ": " << inv.str() << "\n";
      }
      return 0;
    }

    if (*table) return emit_manifest(cmd_table(table_ns, table_max_class, g.verify(table_stretch)), g);
    if (*verify) return emit_manifest(cmd_verify_all(verify_n, g.verify(verify_stretch)), g);
  } catch (const TcCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
