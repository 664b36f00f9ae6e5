/**
 * @file tlcomb_cli.cpp
 * @brief Command-line surface: single polynomial values, table export,
 *        verification suites, FC enumeration and cache management.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage error,
 * 3 domain error (e.g. non-FC argument), 4 hypothesis error
 * (closed formula on a non-(Cw-0) graph).
 */

#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tlcomb/coxeter.hpp"
#include "tlcomb/fullcomm.hpp"
#include "tlcomb/hecke.hpp"
#include "tlcomb/laurent.hpp"
#include "tlcomb/oracle.hpp"
#include "tlcomb/report.hpp"
#include "tlcomb/table.hpp"
#include "tlcomb/tlpoly.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tlcomb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitHypothesis = 4;

CoxeterSystem require_sys(const std::string& id) {
  auto sys = CoxeterSystem::parse(id);
  if (!sys) {
    std::cerr << "unknown Coxeter system id: " << id << "\n";
    std::exit(kExitUsage);
  }
  return *sys;
}

/// Emits a JSON object with an exactly embedded polynomial array.
void print_poly_json(const std::string& family, const std::string& method,
                     const CoxeterSystem& sys, const Element& x,
                     const Element& w, const LaurentPoly& poly) {
  json j;
  j["family"] = family;
  j["method"] = method;
  j["sys"] = sys.id();
  j["x"] = format_element(sys, x);
  j["w"] = format_element(sys, w);
  std::string out = j.dump();
  out.pop_back();
  out += ",\"poly\":" + poly.to_text() + "}";
  std::cout << out << "\n";
}

std::string default_method(const std::string& family) {
  if (family == "r" || family == "d") return "recursive";
  return "closed";  // kl, a, l
}

LaurentPoly compute_poly(Session& session, const std::string& family,
                         const std::string& method, const Element& x,
                         const Element& w) {
  GroupCache& cache = session.cache;
  TLEngine& eng = session.engine;
  HeckeEngine& hk = eng.hecke();
  const CoxeterSystem& sys = cache.sys();
  if (family == "r") {
    if (method == "recursive") return hk.r_poly(x, w);
    if (method == "oracle") return oracle_r_poly(sys, x, w);
  } else if (family == "kl") {
    if (method == "closed") return hk.kl_poly(x, w);
    if (method == "recursive") return hk.kl_poly_recursive(x, w);
  } else if (family == "d") {
    if (method == "recursive") return eng.d_poly_recursive(x, w);
    if (method == "oracle") {
      if (!cache.is_fc(x))
        throw std::domain_error("d oracle: x must be fully commutative");
      return cache.leq(x, w) ? eng.oracle().d_poly(x, w) : LaurentPoly::zero();
    }
    if (method == "closed") {
      if (cache.is_fc(w)) {
        if (!cache.is_fc(x))
          throw std::domain_error("d closed: x must be fully commutative");
        return (cache.leq(x, w) && x == w) ? LaurentPoly::one()
                                           : LaurentPoly::zero();
      }
      return cache.leq(x, w) ? eng.d_poly_chain(x, w) : LaurentPoly::zero();
    }
  } else if (family == "a") {
    if (method == "closed") return eng.a_poly(x, w);
    if (method == "recursive") return eng.a_poly_recursive(x, w);
    if (method == "oracle") {
      // convolution with oracle-derived R and D values
      if (!cache.is_fc(x) || !cache.is_fc(w))
        throw std::domain_error("a oracle: arguments must be fully commutative");
      if (!cache.leq(x, w)) return LaurentPoly::zero();
      LaurentPoly acc;
      for (const auto& y : cache.between(x, w)) {
        const LaurentPoly d =
            (y == x) ? LaurentPoly::one()
                     : (cache.is_fc(y) ? LaurentPoly::zero()
                                       : eng.oracle().d_poly(x, y));
        if (d.is_zero()) continue;
        acc += Int(epsilon(y) * epsilon(w)) * (oracle_r_poly(sys, y, w) * d);
      }
      return acc;
    }
  } else if (family == "l") {
    if (method == "closed") return eng.l_poly(x, w);
    if (method == "recursive") return eng.l_poly_recursive(x, w);
    if (method == "oracle") return eng.l_poly_chain(x, w);
  }
  std::cerr << "unsupported method '" << method << "' for family '" << family
            << "'\n";
  std::exit(kExitUsage);
}

std::vector<PolyRecord> build_table(Session& session,
                                    const std::string& family) {
  GroupCache& cache = session.cache;
  const CoxeterSystem& sys = cache.sys();
  const std::string method = default_method(family);
  std::vector<PolyRecord> records;
  for (const auto& x : cache.group()) {
    const bool x_fc = cache.is_fc(x);
    if ((family == "d" || family == "a" || family == "l") && !x_fc) continue;
    for (const auto& w : cache.group()) {
      if ((family == "a" || family == "l") && !cache.is_fc(w)) continue;
      if (!cache.leq(x, w)) continue;
      LaurentPoly p = compute_poly(session, family, method, x, w);
      if (p.is_zero()) continue;
      records.push_back(PolyRecord{sys.id(), family, format_element(sys, x),
                                   format_element(sys, w), std::move(p)});
    }
  }
  return records;
}

/// Runs one suite on one system, printing the report; returns pass/fail.
bool run_suite(const std::string& suite, const std::string& sys_id,
               bool inject_fault) {
  bool ok = true;
  auto emit = [&](const VerifyReport& rep) {
    std::cout << rep.to_json() << "\n";
    ok = ok && rep.passed();
  };
  const CoxeterSystem sys = require_sys(sys_id);
  if (suite == "fc" || suite == "all") emit(verify_fc(sys, inject_fault));
  if (suite == "hecke" || suite == "all") {
    Session session(sys);
    emit(verify_hecke_identities(session.cache, session.engine.hecke(),
                                 inject_fault));
  }
  if (suite == "tl" || suite == "all") {
    Session session(sys);
    emit(verify_tl_identities(session, inject_fault));
    if (sys.graph_id() == GraphId::A) emit(verify_type_a_structure(session));
  }
  return ok;
}

fs::path cache_dir_from(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("TL_CACHE_DIR")) return env;
  return ".tlcomb-cache";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperley-Lieb / Hecke polynomial calculator"};
  app.require_subcommand(1);

  // ---- group info ----
  std::string gi_sys;
  auto* group = app.add_subcommand("group", "group-level queries");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "system summary as JSON");
  info->add_option("--sys", gi_sys, "system id, e.g. A3, B2, I2(5)")
      ->required();

  // ---- poly ----
  std::string p_family, p_sys, p_x, p_w, p_method;
  auto* poly = app.add_subcommand("poly", "single polynomial value");
  poly->add_option("--family", p_family, "r|kl|d|a|l")
      ->required()
      ->check(CLI::IsMember({"r", "kl", "d", "a", "l"}));
  poly->add_option("--sys", p_sys)->required();
  poly->add_option("--x", p_x, "element (word:/perm:/sperm:)")->required();
  poly->add_option("--w", p_w, "element (word:/perm:/sperm:)")->required();
  poly->add_option("--method", p_method, "recursive|closed|oracle")
      ->check(CLI::IsMember({"recursive", "closed", "oracle"}));

  // ---- table ----
  std::string t_family, t_sys, t_out;
  auto* table = app.add_subcommand("table", "export a full family table");
  table->add_option("--family", t_family)
      ->required()
      ->check(CLI::IsMember({"r", "kl", "d", "a", "l"}));
  table->add_option("--sys", t_sys)->required();
  table->add_option("--out", t_out, "output path (JSON lines)")->required();

  // ---- verify ----
  std::string v_suite = "all";
  std::vector<std::string> v_sys;
  bool v_fault = false;
  auto* verify = app.add_subcommand("verify", "run identity suites");
  verify->add_option("--suite", v_suite, "hecke|tl|fc|all")
      ->check(CLI::IsMember({"hecke", "tl", "fc", "all"}));
  verify->add_option("--sys", v_sys, "system id(s)")->required();
  verify->add_flag("--inject-fault", v_fault)->group("");  // hidden

  // ---- fc ----
  std::string fc_sys;
  auto* fc = app.add_subcommand("fc", "fully commutative elements");
  fc->require_subcommand(1);
  auto* fc_list = fc->add_subcommand("list", "list FC elements as JSON");
  fc_list->add_option("--sys", fc_sys)->required();
  auto* fc_count = fc->add_subcommand("count", "count FC elements");
  fc_count->add_option("--sys", fc_sys)->required();

  // ---- cache ----
  std::string c_sys, c_dir;
  auto* cachecmd = app.add_subcommand("cache", "on-disk table cache");
  cachecmd->require_subcommand(1);
  auto* c_warm = cachecmd->add_subcommand("warm", "precompute all families");
  c_warm->add_option("--sys", c_sys)->required();
  c_warm->add_option("--cache-dir", c_dir);
  auto* c_clear = cachecmd->add_subcommand("clear", "remove cached tables");
  c_clear->add_option("--cache-dir", c_dir);
  auto* c_stats = cachecmd->add_subcommand("stats", "cache statistics");
  c_stats->add_option("--cache-dir", c_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (info->parsed()) {
      const CoxeterSystem sys = require_sys(gi_sys);
      const auto elements = enumerate_group(sys);
      Int n_fc = 0;
      for (const auto& w : elements)
        if (is_fully_commutative(sys, w)) ++n_fc;
      json j;
      j["sys"] = sys.id();
      j["rank"] = sys.rank();
      j["order"] = elements.size();
      j["longest_length"] = longest_element(sys).length();
      j["fc_count"] = std::stoll(n_fc.str());
      j["cw0_class"] = sys.cw0_class();
      std::cout << j.dump() << "\n";
      return kExitOk;
    }

    if (poly->parsed()) {
      Session session(require_sys(p_sys));
      const CoxeterSystem& sys = session.cache.sys();
      Element x, w;
      try {
        x = parse_element(sys, p_x);
        w = parse_element(sys, p_w);
      } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
      }
      const std::string method =
          p_method.empty() ? default_method(p_family) : p_method;
      print_poly_json(p_family, method, sys, x, w,
                      compute_poly(session, p_family, method, x, w));
      return kExitOk;
    }

    if (table->parsed()) {
      Session session(require_sys(t_sys));
      auto records = build_table(session, t_family);
      write_records(t_out, records);
      json j;
      j["sys"] = t_sys;
      j["family"] = t_family;
      j["records"] = records.size();
      j["path"] = t_out;
      std::cout << j.dump() << "\n";
      return kExitOk;
    }

    if (verify->parsed()) {
      bool all_ok = true;
      for (const auto& id : v_sys)
        all_ok = run_suite(v_suite, id, v_fault) && all_ok;
      return all_ok ? kExitOk : kExitVerifyFailed;
    }

    if (fc_list->parsed() || fc_count->parsed()) {
      const CoxeterSystem sys = require_sys(fc_sys);
      const auto fc_elements = fully_commutative_elements(sys);
      json j;
      j["sys"] = sys.id();
      j["count"] = fc_elements.size();
      if (fc_list->parsed()) {
        json arr = json::array();
        for (const auto& w : fc_elements) arr.push_back(format_element(sys, w));
        j["elements"] = std::move(arr);
      }
      std::cout << j.dump() << "\n";
      return kExitOk;
    }

    if (c_warm->parsed()) {
      const fs::path dir = cache_dir_from(c_dir);
      fs::create_directories(dir);
      Session session(require_sys(c_sys));
      json files = json::array();
      for (const std::string family : {"r", "kl", "d", "a", "l"}) {
        const fs::path path = dir / (c_sys + "." + family + ".jsonl");
        write_records(path.string(), build_table(session, family));
        files.push_back(path.string());
      }
      json j;
      j["sys"] = c_sys;
      j["files"] = std::move(files);
      std::cout << j.dump() << "\n";
      return kExitOk;
    }

    if (c_clear->parsed() || c_stats->parsed()) {
      const fs::path dir = cache_dir_from(c_dir);
      long long files = 0, records = 0, removed = 0;
      if (fs::exists(dir)) {
        for (const auto& entry : fs::directory_iterator(dir)) {
          if (entry.path().extension() != ".jsonl") continue;
          if (c_clear->parsed()) {
            fs::remove(entry.path());
            ++removed;
          } else {
            ++files;
            records +=
                static_cast<long long>(read_records(entry.path().string()).size());
          }
        }
      }
      json j;
      if (c_clear->parsed()) {
        j["removed"] = removed;
      } else {
        j["files"] = files;
        j["records"] = records;
      }
      std::cout << j.dump() << "\n";
      return kExitOk;
    }
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return std::string(e.what()).find("(Cw-0)") != std::string::npos
               ? kExitHypothesis
               : kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
