#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "gdd/admissibility.hpp"
#include "gdd/codes.hpp"
#include "gdd/dispatcher.hpp"
#include "gdd/io.hpp"

using namespace gdd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInternal = 2;

std::string default_cache_dir() {
  if (const char* env = std::getenv("GDD_CACHE_DIR")) return env;
  return "./gdd-cache";
}

int run_verify(const std::vector<std::string>& files) {
  std::vector<TextSection> secs;
  for (auto& f : files)
    for (auto& s : read_file(f)) secs.push_back(s);
  if (secs.empty()) {
    std::cerr << "no designs found\n";
    return kExitInvalid;
  }
  if (secs.size() == 1) {
    auto rep = verify_gdd(secs[0].design, secs[0].design.type(), secs[0].block_sizes);
    if (rep.valid) {
      std::cout << "valid " << secs[0].design.type().str() << "\n";
      return kExitOk;
    }
    for (auto& v : rep.violations) std::cout << v.rule << " " << v.witness << "\n";
    return kExitInvalid;
  }
  if (secs.size() == 2) {
    DesignPair p{secs[0].design, secs[1].design};
    auto rep = verify_disjoint_pair(p, secs[0].design.type());
    if (rep.valid) {
      std::cout << "valid disjoint pair " << secs[0].design.type().str() << "\n";
      return kExitOk;
    }
    for (auto& v : rep.violations) std::cout << v.rule << " " << v.witness << "\n";
    return kExitInvalid;
  }
  std::cerr << "expected one or two designs\n";
  return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constructive engine for disjoint group divisible design pairs"};
  app.require_subcommand(1);
  std::string cache_dir = default_cache_dir();
  bool no_cache = false;
  app.add_option("--cache-dir", cache_dir, "ingredient cache directory");
  app.add_flag("--no-cache", no_cache, "force re-search, ignore cached entries");

  int g = 0, t = 0, u = 0;
  std::string outfile;

  auto* c_construct = app.add_subcommand("construct", "build a disjoint pair of type g^t u^1");
  c_construct->add_option("g", g)->required();
  c_construct->add_option("t", t)->required();
  c_construct->add_option("u", u)->required();
  c_construct->add_option("-o,--output", outfile, "write both designs to FILE");

  auto* c_verify = app.add_subcommand("verify", "verify design file(s)");
  std::vector<std::string> files;
  c_verify->add_option("files", files)->required()->expected(1, 2);

  auto* c_adm = app.add_subcommand("admissible", "decide spectrum membership");
  c_adm->add_option("g", g)->required();
  c_adm->add_option("t", t)->required();
  c_adm->add_option("u", u)->required();

  auto* c_explain = app.add_subcommand("explain", "print the routing tree");
  c_explain->add_option("g", g)->required();
  c_explain->add_option("t", t)->required();
  c_explain->add_option("u", u)->required();

  int max_n = 40, jobs = 1;
  bool timings = false;
  std::string designs_dir, report_file;
  auto* c_scan = app.add_subcommand("scan", "construct every admissible triple up to a bound");
  c_scan->add_option("--max-n", max_n, "bound on gt+u");
  c_scan->add_option("--jobs", jobs, "worker threads");
  c_scan->add_flag("--timings", timings, "include wall-clock times in the report");
  c_scan->add_option("--designs-dir", designs_dir, "write each pair to DIR");
  c_scan->add_option("-o,--report", report_file, "write the report to FILE");

  auto* c_export = app.add_subcommand("export-code", "emit the ternary code of a pair");
  c_export->add_option("g", g)->required();
  c_export->add_option("t", t)->required();
  c_export->add_option("u", u)->required();
  c_export->add_option("-o,--output", outfile, "output file")->required();

  auto* c_cache = app.add_subcommand("cache", "cache maintenance");
  std::string cache_op;
  c_cache->add_option("op", cache_op, "warm|clear|stats")->required();
  int warm_n = 60;
  c_cache->add_option("--max-n", warm_n, "warm bound on gt+u");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    Oracle oracle(cache_dir, !no_cache);
    Dispatcher dispatcher(oracle);

    if (*c_construct) {
      auto res = dispatcher.construct(g, t, u);
      std::string text = write_pair(res.pair);
      if (!outfile.empty())
        write_file(outfile, text);
      else
        std::cout << text;
      std::cerr << "blocks per design: " << res.blocks << "\n";
      return kExitOk;
    }
    if (*c_verify) return run_verify(files);
    if (*c_adm) {
      auto d = pair_admissible(g, t, u);
      if (d.admissible) {
        std::cout << "admissible\n";
        return kExitOk;
      }
      std::cout << "not admissible; failed conditions:";
      for (int c : d.failed_conditions) std::cout << " " << c;
      std::cout << "\n";
      return kExitInvalid;
    }
    if (*c_explain) {
      std::cout << trace_to_string(dispatcher.explain(g, t, u));
      return kExitOk;
    }
    if (*c_scan) {
      auto rows = dispatcher.scan(max_n, jobs);
      std::ostringstream report;
      bool all_ok = true;
      for (auto& r : rows) {
        report << "TRIPLE " << r.g << " " << r.t << " " << r.u << " ROUTE " << r.route
               << " BLOCKS " << r.blocks << " STATUS " << (r.ok ? "ok" : "fail");
        if (timings)
          report << " TIME " << r.millis;
        else
          report << " TIME -";
        report << "\n";
        if (!r.ok) {
          all_ok = false;
          report << "# " << r.error << "\n";
        }
        if (r.ok && !designs_dir.empty()) {
          std::filesystem::create_directories(designs_dir);
          auto res = dispatcher.construct(r.g, r.t, r.u);
          std::string name = designs_dir + "/pair_" + std::to_string(r.g) + "_" +
                             std::to_string(r.t) + "_" + std::to_string(r.u) + ".gdd";
          write_file(name, write_pair(res.pair));
        }
      }
      if (!report_file.empty())
        write_file(report_file, report.str());
      else
        std::cout << report.str();
      return all_ok ? kExitOk : kExitInvalid;
    }
    if (*c_export) {
      auto res = dispatcher.construct(g, t, u);
      TernaryCode code = export_code(res.pair, GroupType::of(g, t, u));
      write_file(outfile, code.str());
      return kExitOk;
    }
    if (*c_cache) {
      if (cache_op == "warm") {
        auto rows = dispatcher.scan(warm_n, jobs);
        for (auto& r : rows)
          if (!r.ok) {
            std::cerr << "warm failed at (" << r.g << "," << r.t << "," << r.u << ")\n";
            return kExitInternal;
          }
        std::cout << "cache warmed to gt+u <= " << warm_n << "\n";
        return kExitOk;
      }
      if (cache_op == "clear") {
        std::filesystem::remove_all(cache_dir);
        std::cout << "cache cleared\n";
        return kExitOk;
      }
      if (cache_op == "stats") {
        size_t files_n = 0, bytes = 0;
        if (std::filesystem::exists(cache_dir))
          for (auto& e : std::filesystem::directory_iterator(cache_dir)) {
            files_n++;
            bytes += e.file_size();
          }
        std::cout << "entries " << files_n << " bytes " << bytes << "\n";
        return kExitOk;
      }
      std::cerr << "unknown cache operation\n";
      return 64;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::not_admissible:
      case Errc::does_not_exist:
      case Errc::no_pair:
        return kExitInvalid;
      default:
        return kExitInternal;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 64;
}
