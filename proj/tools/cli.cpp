#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "til/groebner.hpp"
#include "til/io.hpp"
#include "til/parallel.hpp"
#include "til/param.hpp"
#include "til/report.hpp"
#include "til/resolution.hpp"
#include "til/transfer.hpp"

namespace til::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Globals {
  std::string field;
  std::string out_dir;
  bool gb_cache = false;
  bool timing = false;
};

enum class DefaultField { rationals, prime_p };

// "Q", "F<n>", or "Fp" meaning the prime field of characteristic p.
Field resolve_field(const std::string& name, int p, DefaultField fallback) {
  std::string n = name;
  if (n.empty()) n = fallback == DefaultField::rationals ? "Q" : "Fp";
  if (n == "Fp") {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
      throw std::invalid_argument("--field Fp needs a prime p, got p = " + std::to_string(p));
    return Field::prime(static_cast<std::uint64_t>(p));
  }
  return Field::parse(n);
}

// A unit of work yields one or more output lines.
struct Job {
  std::function<std::vector<json>()> run;
};

json report_line(const Report& r) { return r.to_json(); }

bool line_passes(const json& j) { return !j.contains("verdict") || j["verdict"] == "pass"; }

class Runner {
 public:
  Runner(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  void add(std::function<std::vector<json>()> fn) { jobs_.push_back({std::move(fn)}); }

  // Runs all jobs concurrently and prints their lines in job order as soon
  // as every earlier job has finished.
  bool execute() {
    const std::size_t n = jobs_.size();
    std::vector<std::optional<std::vector<json>>> done(n);
    std::size_t next = 0;
    bool all_pass = true;
    std::mutex mu;
    std::unique_ptr<std::ofstream> log;
    if (!g_.out_dir.empty()) {
      fs::create_directories(g_.out_dir);
      log = std::make_unique<std::ofstream>(fs::path(g_.out_dir) / "reports.jsonl");
    }
    parallel_for(n, [&](std::size_t i) {
      auto t0 = std::chrono::steady_clock::now();
      std::vector<json> lines = jobs_[i].run();
      if (g_.timing) {
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        for (auto& l : lines) l["wall_time_ms"] = ms;
      }
      std::lock_guard<std::mutex> lock(mu);
      done[i] = std::move(lines);
      while (next < n && done[next]) {
        for (const auto& l : *done[next]) {
          all_pass = all_pass && line_passes(l);
          out_ << l.dump() << '\n';
          if (log) *log << l.dump() << '\n';
        }
        out_.flush();
        done[next].reset();
        ++next;
      }
    });
    return all_pass;
  }

 private:
  const Globals& g_;
  std::ostream& out_;
  std::vector<Job> jobs_;
};

void write_file(const Globals& g, const std::string& name, const std::string& content) {
  if (g.out_dir.empty()) return;
  fs::create_directories(g.out_dir);
  std::ofstream(fs::path(g.out_dir) / name) << content;
}

std::unique_ptr<GbCache> make_cache(const Globals& g) {
  if (!g.gb_cache) return nullptr;
  return std::make_unique<GbCache>(fs::path(g.out_dir) / "gb-cache");
}

template <class K>
json ideal_json(const std::string& which, const IdealBasis<K>& I) {
  json gens = json::array();
  for (const auto& f : I.gens()) gens.push_back(to_string(f));
  return {{"ideal", which}, {"ring", ring_to_json(I.ring())}, {"generators", gens}, {"count", I.size()}};
}

json gen_ideal(const std::string& which, int p, int q, int r, const Globals& g) {
  const bool transfer_like = which == "transfer";
  Field F = resolve_field(g.field, p, transfer_like ? DefaultField::prime_p : DefaultField::rationals);
  json line = visit_field(F, [&](auto tag) -> json {
    using K = typename decltype(tag)::type;
    if (which == "transfer") {
      auto fam = build_transfer_family<K>(p, q, r, F);
      return ideal_json(which, transfer_ideal(fam));
    }
    if (r != 0) throw std::invalid_argument("--r applies to --which transfer only");
    if (which == "minors") {
      Ring S = matrix_ring(p, q, F);
      return ideal_json(which, maximal_minors(build_A<K>(p, q, S)));
    }
    if (which == "sum-minors") {
      Ring S = matrix_ring(p, q, F);
      return ideal_json(which, sum_of_minors_ideal<K>(p, q, S));
    }
    if (which == "L") {
      Ring S = matrix_ring(p, q, F);
      return ideal_json(which, ideal_L(p, q).to_basis<K>(S));
    }
    if (q != 2) throw std::invalid_argument("--which Iprime is defined for q = 2 only");
    return ideal_json(which, associated_graded_ideal<K>(p, F));
  });
  line["params"] = {{"p", p}, {"q", q}, {"r", r}};
  write_file(g, "ideal_" + which + "_p" + std::to_string(p) + "_q" + std::to_string(q) + "_r" +
                    std::to_string(r) + ".json",
             line.dump(2) + "\n");
  return line;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transfer ideals and determinantal minors: constructions and checks", "til"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "Coefficient field: Q, Fp (characteristic p) or F<n>");
  app.add_option("--out", g.out_dir, "Directory for file outputs");
  app.add_flag("--gb-cache", g.gb_cache, "Reuse Groebner bases stored under <out>/gb-cache");
  app.add_flag("--timing", g.timing, "Add wall_time_ms to every line");

  std::vector<int> ps{3}, qs{2}, rs;
  long bound = -1;
  std::string which;
  std::size_t samples = 20;
  long max_degree = 5;
  std::uint64_t seed = 1;

  auto add_pq = [&](CLI::App* c, bool with_q) {
    c->add_option("--p", ps, "Value(s) of p")->expected(1, -1);
    if (with_q) c->add_option("--q", qs, "Value(s) of q")->expected(1, -1);
  };

  auto* gen = app.add_subcommand("gen", "Construct objects");
  gen->require_subcommand(1);
  gen->fallthrough();
  auto* gen_ideal_cmd = gen->add_subcommand("ideal", "Print an ideal's generators");
  add_pq(gen_ideal_cmd, true);
  gen_ideal_cmd->add_option("--r", rs, "Value(s) of r")->expected(1, -1);
  gen_ideal_cmd->add_option("--which", which, "Ideal to build")
      ->required()
      ->check(CLI::IsMember({"transfer", "minors", "sum-minors", "L", "Iprime"}));

  auto* check = app.add_subcommand("check", "Run verification suites");
  check->require_subcommand(1);
  check->fallthrough();
  auto* c_conj = check->add_subcommand("conjecture", "Elimination ideal equals the ideal of maximal minors");
  add_pq(c_conj, true);
  auto* c_stab = check->add_subcommand("stability", "Extension of the image of I_qp equals I_{qp+r}");
  add_pq(c_stab, true);
  c_stab->add_option("--r", rs, "Value(s) of r (default 0..p-1)")->expected(1, -1);
  c_stab->add_option("--bound", bound, "Hilbert-function degree bound (default 8)");
  auto* c_init = check->add_subcommand("initial", "Antidiagonal leads and the gap criterion");
  add_pq(c_init, true);
  c_init->add_option("--bound", bound, "Degree bound for the gap criterion (default 4)");
  auto* c_q2 = check->add_subcommand("q2", "Multigraded dimension counts and the initial algebra for q = 2");
  add_pq(c_q2, false);
  c_q2->add_option("--bound", bound, "Total-degree bound (default 6)");
  auto* c_gb5 = check->add_subcommand("gb5", "Buchberger criterion for the homogenized minors");
  c_gb5->add_option("--p", ps, "Value(s) of p (default 5)")->expected(1, -1);
  auto* c_sanity = check->add_subcommand("transfer-sanity", "Transfer images rewrite into the elimination ideal");
  add_pq(c_sanity, false);
  c_sanity->add_option("--samples", samples, "Number of random monomials");
  c_sanity->add_option("--max-degree", max_degree, "Maximal monomial degree");
  c_sanity->add_option("--seed", seed, "Random seed");
  for (auto* c : check->get_subcommands({})) c->fallthrough();

  auto* resolve = app.add_subcommand("resolve", "Resolution of S/I' for q = 2 and its Betti table");
  resolve->fallthrough();
  add_pq(resolve, false);
  resolve->add_option("--bound", bound, "Internal-degree bound for exactness (default 8)");
  gen_ideal_cmd->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return usage;
  }
  if (g.gb_cache && g.out_dir.empty()) {
    err << "error: --gb-cache needs --out\n";
    return usage;
  }
  if (c_gb5->parsed() && c_gb5->count("--p") == 0) ps = {5};

  Runner runner(g, out);
  auto reports = [](std::vector<Report> rs) {
    std::vector<json> lines;
    for (const auto& r : rs) lines.push_back(report_line(r));
    return lines;
  };

  try {
    if (gen_ideal_cmd->parsed()) {
      if (rs.empty()) rs = {0};
      for (int p : ps)
        for (int q : qs)
          for (int r : rs) runner.add([=, &g] { return std::vector<json>{gen_ideal(which, p, q, r, g)}; });
    } else if (c_conj->parsed()) {
      for (int p : ps)
        for (int q : qs)
          runner.add([=, &g] {
            auto cache = make_cache(g);
            return reports({check_conjecture(p, q, resolve_field(g.field, p, DefaultField::rationals),
                                             cache.get())});
          });
    } else if (c_stab->parsed()) {
      long b = bound < 0 ? 8 : bound;
      for (int p : ps)
        for (int q : qs) {
          std::vector<int> rr = rs;
          if (rr.empty())
            for (int r = 0; r < p; ++r) rr.push_back(r);
          for (int r : rr)
            runner.add([=, &g] {
              return reports({check_stability(p, q, r, b, resolve_field(g.field, p, DefaultField::prime_p))});
            });
        }
    } else if (c_init->parsed()) {
      long b = bound < 0 ? 4 : bound;
      for (int p : ps)
        for (int q : qs)
          runner.add([=, &g] {
            Field F = resolve_field(g.field, p, DefaultField::rationals);
            return reports({verify_antidiagonal_lead(p, q, F), verify_gap_lemma(p, q, b)});
          });
    } else if (c_q2->parsed()) {
      long b = bound < 0 ? 6 : bound;
      for (int p : ps)
        runner.add([=, &g] {
          return reports({verify_q2_conjecture(p, b, resolve_field(g.field, p, DefaultField::rationals))});
        });
    } else if (c_gb5->parsed()) {
      for (int p : ps)
        runner.add([=, &g] {
          return reports({check_homogenized_minors_gb(p, resolve_field(g.field, p, DefaultField::rationals))});
        });
    } else if (c_sanity->parsed()) {
      if (!g.field.empty()) throw std::invalid_argument("transfer-sanity always works over F_p");
      for (int p : ps)
        runner.add([=] { return reports({transfer_image_sanity(p, samples, max_degree, seed)}); });
    } else if (resolve->parsed()) {
      long b = bound < 0 ? 8 : bound;
      for (int p : ps)
        runner.add([=, &g] {
          Field F = resolve_field(g.field, p, DefaultField::rationals);
          Report res = verify_resolution(p, b, F);
          Report betti = betti_crosscheck(p, b, F);
          if (res.details.contains("betti_text"))
            write_file(g, "betti_p" + std::to_string(p) + ".txt", res.details["betti_text"].get<std::string>());
          return reports({res, betti});
        });
    }
    return runner.execute() ? ok : check_failed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal;
  }
}

}  // namespace til::cli
