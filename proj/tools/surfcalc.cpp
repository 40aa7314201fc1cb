// Batch front end over the C library API. Every subcommand prints one JSON
// (or DOT) document on stdout. Exit codes: 0 success, 2 validation problem,
// 1 parse or internal error, 64 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "surfcalc/surfcalc.h"

namespace {

struct CliError {
  int exit_code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{1, "cannot open file: " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int status_exit(sc_status st) {
  switch (st) {
    case SC_OK: return 0;
    case SC_ERR_VALIDATION:
    case SC_ERR_FRAGMENT:
    case SC_ERR_DOMAIN: return 2;
    default: return 1;
  }
}

// Runs a C-API call that fills an output string; prints it and returns the
// process exit code.
template <typename F>
int emit(F&& call) {
  char* out = nullptr;
  sc_status st = call(&out);
  if (st != SC_OK) {
    int code = status_exit(st);
    std::ostream& os = code == 2 ? std::cout : std::cerr;
    os << "{\"error\":\"" << sc_last_error() << "\"}\n";
    return code;
  }
  std::cout << out << "\n";
  sc_string_free(out);
  return 0;
}

struct SurfaceHandle {
  sc_surface* ptr = nullptr;
  ~SurfaceHandle() { sc_surface_free(ptr); }
};

// Parses and validates a surface spec file; throws CliError with the right
// exit code on failure.
void load_surface(const std::string& path, SurfaceHandle& h) {
  std::string text = read_file(path);
  sc_status st = sc_surface_parse(text.c_str(), &h.ptr);
  if (st != SC_OK) throw CliError{status_exit(st), sc_last_error()};
  char* viol = nullptr;
  st = sc_surface_validate(h.ptr, &viol);
  if (st != SC_OK) throw CliError{status_exit(st), sc_last_error()};
  std::string v = viol;
  sc_string_free(viol);
  if (v != "[]") throw CliError{2, "{\"violations\":" + v + "}"};
}

std::string random_word(std::uint64_t seed, int length, int rank) {
  std::mt19937_64 rng(seed);
  std::ostringstream os;
  for (int i = 0; i < length; ++i) {
    if (i) os << '.';
    switch (rng() % 3) {
      case 0: os << 'h' << rng() % rank; break;
      case 1: os << 'H' << rng() % rank; break;
      default: os << "c{x" << rng() % 8 << '}'; break;
    }
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surface end-space and mapping-class word calculator"};
  app.require_subcommand(1);

  int depth = 4;
  app.add_option("--depth", depth, "truncation depth")
      ->envname("SURFCALC_DEPTH")
      ->capture_default_str();
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized inputs");
  std::string format = "json";
  app.add_option("--format", format, "output format: json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  std::string file_a, file_b, expr, word, substitute, which = "teg";
  int window = 16, rank = 8, random_length = 0;
  long max_count = 1000000;

  auto* classify = app.add_subcommand("classify", "homeomorphy verdict for two surface specs");
  classify->add_option("a", file_a, "first surface spec file")->required();
  classify->add_option("b", file_b, "second surface spec file")->required();

  auto* ends = app.add_subcommand("ends-normalize", "canonical form of an end expression");
  ends->add_option("expr", expr, "end expression")->required();

  auto* exhaust = app.add_subcommand("exhaust", "build and validate a principal exhaustion");
  exhaust->add_option("spec", file_a, "surface spec file")->required();

  auto* alexander = app.add_subcommand("alexander", "curve system for the Alexander method");
  alexander->add_option("spec", file_a, "surface spec file")->required();

  auto* pants = app.add_subcommand("pants-check",
                                   "enumerate pants decompositions and check cut vertices");
  pants->add_option("surface", file_a, "finite surface file")->required();
  pants->add_option("--max-count", max_count, "cap on enumerated decompositions");

  auto* basis = app.add_subcommand("basis", "separating-curve basis of the genus ends");
  basis->add_option("spec", file_a, "surface spec file")->required();

  auto* graph = app.add_subcommand("shift-graph", "ends graph and its shift spanning tree");
  graph->add_option("spec", file_a, "surface spec file")->required();
  graph->add_option("--which", which, "eg, teg or nteg")
      ->check(CLI::IsMember({"eg", "teg", "nteg"}));

  auto* rankcmd = app.add_subcommand("rank", "rank of separating first homology");
  rankcmd->add_option("spec", file_a, "surface spec file")->required();

  auto* wordcmd = app.add_subcommand("word-eval", "evaluate a word over compact and shift letters");
  wordcmd->add_option("word", word, "word text, e.g. c{a}.h0.c{b}.H0");
  wordcmd->add_option("--rank", rank, "basis rank the shifts index into");
  wordcmd->add_option("--substitute", substitute,
                      "window JSON {\"index\":i,\"curves\":[...],\"separates\":[...]}");
  wordcmd->add_option("--random", random_length, "evaluate a seeded random word of this length");

  auto* relation = app.add_subcommand("relation-check", "strip model shift relation");
  relation->add_option("--window", window, "half-width of the strip window");

  auto* cohom = app.add_subcommand("cohomology", "first cohomology of the pure mapping class group");
  cohom->add_option("spec", file_a, "surface spec file")->required();

  // Global options (--depth, --seed, --format) may appear after a subcommand.
  for (CLI::App* sub : {classify, ends, exhaust, alexander, pants, basis, graph, rankcmd,
                        wordcmd, relation, cohom}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 64;
  }

  try {
    if (*classify) {
      SurfaceHandle a, b;
      load_surface(file_a, a);
      load_surface(file_b, b);
      return emit([&](char** out) { return sc_classify(a.ptr, b.ptr, 0, out); });
    }
    if (*ends) {
      return emit([&](char** out) { return sc_ends_normalize(expr.c_str(), 0, out); });
    }
    if (*exhaust) {
      SurfaceHandle s;
      load_surface(file_a, s);
      return emit([&](char** out) { return sc_exhaust(s.ptr, depth, out); });
    }
    if (*alexander) {
      SurfaceHandle s;
      load_surface(file_a, s);
      return emit([&](char** out) { return sc_alexander(s.ptr, depth, out); });
    }
    if (*pants) {
      std::string text = read_file(file_a);
      return emit([&](char** out) { return sc_pants_check(text.c_str(), max_count, out); });
    }
    if (*basis) {
      SurfaceHandle s;
      load_surface(file_a, s);
      return emit([&](char** out) { return sc_basis(s.ptr, depth, out); });
    }
    if (*graph) {
      SurfaceHandle s;
      load_surface(file_a, s);
      int as_dot = format == "dot" ? 1 : 0;
      return emit([&](char** out) {
        return sc_shift_graph(s.ptr, depth, which.c_str(), as_dot, out);
      });
    }
    if (*rankcmd) {
      SurfaceHandle s;
      load_surface(file_a, s);
      return emit([&](char** out) { return sc_rank(s.ptr, depth, out); });
    }
    if (*wordcmd) {
      if (random_length > 0) {
        word = random_word(seed, random_length, rank);
      } else if (word.empty()) {
        std::cerr << "word-eval needs a word or --random\n";
        return 64;
      }
      return emit([&](char** out) {
        return sc_word_eval(word.c_str(), rank, substitute.empty() ? nullptr : substitute.c_str(),
                            out);
      });
    }
    if (*relation) {
      return emit([&](char** out) { return sc_relation_check(window, out); });
    }
    if (*cohom) {
      SurfaceHandle s;
      load_surface(file_a, s);
      return emit([&](char** out) { return sc_cohomology(s.ptr, depth, out); });
    }
  } catch (const CliError& e) {
    std::ostream& os = e.exit_code == 2 ? std::cout : std::cerr;
    if (!e.message.empty() && e.message.front() == '{') {
      os << e.message << "\n";
    } else {
      os << "{\"error\":\"" << e.message << "\"}\n";
    }
    return e.exit_code;
  }
  return 64;
}
