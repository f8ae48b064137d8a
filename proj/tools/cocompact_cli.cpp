// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cocompact/cocompact.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotCocompact = 1;
constexpr int kExitError = 2;

struct GraphDeleter {
  void operator()(cc_graph* g) const { cc_graph_free(g); }
};
using GraphPtr = std::unique_ptr<cc_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { cc_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct Failed {
  int code;
};

void check(cc_status s, const std::string& what) {
  if (s == CC_OK) return;
  std::cerr << "cocompact: " << what << ": " << cc_last_error() << "\n";
  throw Failed{kExitError};
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cocompact: cannot open '" << path << "'\n";
    throw Failed{kExitError};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GraphPtr load(const std::string& path) {
  std::string text = read_input(path);
  cc_graph* g = nullptr;
  check(cc_graph_parse(text.data(), text.size(), &g), "reading " + path);
  return GraphPtr(g);
}

std::vector<const char*> c_path(const std::vector<std::string>& path) {
  std::vector<const char*> out;
  for (const auto& e : path) out.push_back(e.c_str());
  return out;
}

cc_format format_of(const std::string& f) { return f == "dot" ? CC_FORMAT_DOT : CC_FORMAT_JSON; }

void emit(char* s) {
  CString owned(s);
  std::cout << owned.get();
}

void emit_graph(const cc_graph* g, const std::string& format) {
  char* out = nullptr;
  check(cc_graph_render(g, format_of(format), &out), "rendering graph");
  emit(out);
}

std::vector<uint32_t> parse_ks(const std::vector<std::string>& parts) {
  std::vector<uint32_t> ks;
  for (const auto& p : parts) {
    try {
      std::size_t used = 0;
      long v = std::stol(p, &used);
      if (used != p.size() || v < 1) throw std::invalid_argument(p);
      ks.push_back(static_cast<uint32_t>(v));
    } catch (const std::exception&) {
      std::cerr << "cocompact: --ks entries must be positive integers, got '" << p << "'\n";
      throw Failed{kExitError};
    }
  }
  return ks;
}

std::vector<uint32_t> parse_heavy(uint32_t n, const std::vector<std::string>& parts) {
  std::vector<uint32_t> mult(n, 1);
  for (const auto& p : parts) {
    auto eq = p.find('=');
    try {
      if (eq == std::string::npos) throw std::invalid_argument(p);
      long i = std::stol(p.substr(0, eq));
      long m = std::stol(p.substr(eq + 1));
      if (i < 0 || i >= static_cast<long>(n) || m < 1) throw std::out_of_range(p);
      mult[static_cast<std::size_t>(i)] = static_cast<uint32_t>(m);
    } catch (const std::exception&) {
      std::cerr << "cocompact: --heavy entries must look like i=m with 0 <= i < n and m >= 1, got '" << p
                << "'\n";
      throw Failed{kExitError};
    }
  }
  return mult;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Decide cocompactness of unfolding trees of rooted multigraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cc_version()));

  std::string file, labels_file, format = "json";
  std::vector<std::string> path, ks, heavy;
  bool strip = false, whole = false, fix_root = false, original_tags = false;
  std::size_t depth = 0, max_len = 0;
  int root_mult = -1;
  uint32_t n = 0;

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "graph JSON file, '-' for stdin")->required(); };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
  };

  auto* validate = app.add_subcommand("validate", "check the graph and its rootedness");
  add_file(validate);

  auto* decide = app.add_subcommand("decide", "decide cocompactness of the unfolding tree");
  add_file(decide);
  decide->add_flag("--strip-sinks", strip, "repeatedly delete sinks first");

  auto* label = app.add_subcommand("label", "coarsest pre-actual labelling of the graph minus its root");
  add_file(label);
  label->add_flag("--whole", whole, "label the whole graph instead");

  auto* verify = app.add_subcommand("verify-labelling", "check that a labelling is actual");
  add_file(verify);
  verify->add_option("--labels", labels_file, "labelling JSON file")->required();

  auto* quotient = app.add_subcommand("quotient", "quotient by the coarsest non-edge-collapsing relation");
  add_file(quotient);
  quotient->add_flag("--fix-root", fix_root, "keep the root in its own block");
  add_format(quotient, {"json", "dot"});

  auto* reroot = app.add_subcommand("reroot", "build the rerooted graph G^p");
  add_file(reroot);
  reroot->add_option("--path", path, "comma-separated edge ids from the root")->delimiter(',');
  add_format(reroot, {"json", "dot"});

  auto* unfold = app.add_subcommand("unfold", "truncated unfolding tree");
  add_file(unfold);
  unfold->add_option("--depth", depth, "truncation depth")->required();
  unfold->add_option("--path", path, "reroot the tree at this path first")->delimiter(',');
  unfold->add_flag("--original-tags", original_tags, "with --format code: keep '-' tags on reversed edges");
  add_format(unfold, {"json", "dot", "code"});

  auto* probe = app.add_subcommand("probe", "count rerooted tree classes by path length");
  add_file(probe);
  probe->add_option("--max-len", max_len, "longest path length")->required();
  probe->add_option("--depth", depth, "truncation depth")->required();

  auto* gen = app.add_subcommand("gen", "generate a family member");
  gen->require_subcommand(1);
  auto* focal = gen->add_subcommand("focal", "focal unfolding cycle");
  focal->add_option("--ks", ks, "comma-separated k_0..k_{N-1}")->required()->delimiter(',');
  focal->add_option("--root-mult", root_mult, "number of root edges to v_1 (default k_0)");
  add_format(focal, {"json", "dot"});
  auto* circular = gen->add_subcommand("circular", "circular graph");
  circular->add_option("--n", n, "cycle length")->required()->check(CLI::PositiveNumber);
  circular->add_option("--heavy", heavy, "multiplicities as i=m pairs")->delimiter(',');
  circular->add_option("--raw-root-mult", root_mult, "number of root edges (default mult(0)+1)");
  add_format(circular, {"json", "dot"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*validate) {
      auto g = load(file);
      check(cc_graph_validate(g.get()), "validate");
      std::cout << "{\"valid\": true, \"vertices\": " << cc_graph_vertex_count(g.get())
                << ", \"edges\": " << cc_graph_edge_count(g.get()) << "}\n";
      return kExitOk;
    }
    if (*decide) {
      auto g = load(file);
      cc_verdict verdict;
      char* out = nullptr;
      check(cc_decide(g.get(), strip ? 1 : 0, &verdict, &out), "decide");
      emit(out);
      if (verdict == CC_VERDICT_COCOMPACT) return kExitOk;
      if (verdict == CC_VERDICT_NOT_COCOMPACT) return kExitNotCocompact;
      std::cerr << "cocompact: unsupported input (see witness)\n";
      return kExitError;
    }
    if (*label) {
      auto g = load(file);
      int found = 0;
      char* out = nullptr;
      check(cc_label(g.get(), whole ? 1 : 0, &found, &out), "label");
      emit(out);
      return kExitOk;
    }
    if (*verify) {
      auto g = load(file);
      std::string text = read_input(labels_file);
      int ok = 0;
      char* out = nullptr;
      check(cc_verify_labelling(g.get(), text.data(), text.size(), &ok, &out), "verify-labelling");
      emit(out);
      return ok ? kExitOk : kExitError;
    }
    if (*quotient) {
      auto g = load(file);
      cc_graph* q = nullptr;
      char* blocks = nullptr;
      check(cc_quotient(g.get(), fix_root ? 1 : 0, &q, &blocks), "quotient");
      GraphPtr owned(q);
      CString owned_blocks(blocks);
      if (format == "dot")
        emit_graph(q, "dot");
      else
        std::cout << owned_blocks.get();
      return kExitOk;
    }
    if (*reroot) {
      auto g = load(file);
      auto p = c_path(path);
      cc_graph* out = nullptr;
      check(cc_reroot(g.get(), p.data(), p.size(), &out), "reroot");
      GraphPtr owned(out);
      emit_graph(out, format);
      return kExitOk;
    }
    if (*unfold) {
      auto g = load(file);
      auto p = c_path(path);
      char* out = nullptr;
      if (format == "code") {
        check(cc_rerooted_code(g.get(), p.data(), p.size(), static_cast<uint32_t>(depth), original_tags ? 1 : 0,
                               &out),
              "unfold");
        CString owned(out);
        std::cout << owned.get() << "\n";
      } else {
        check(cc_unfold(g.get(), p.data(), p.size(), static_cast<uint32_t>(depth), format_of(format), &out),
              "unfold");
        emit(out);
      }
      return kExitOk;
    }
    if (*probe) {
      auto g = load(file);
      std::vector<uint64_t> counts(max_len + 1);
      check(cc_probe(g.get(), static_cast<uint32_t>(max_len), static_cast<uint32_t>(depth), counts.data()),
            "probe");
      std::cout << "L,count\n";
      for (std::size_t l = 0; l < counts.size(); ++l) std::cout << l << "," << counts[l] << "\n";
      return kExitOk;
    }
    if (*focal) {
      auto seq = parse_ks(ks);
      cc_graph* out = nullptr;
      check(cc_gen_focal(seq.data(), seq.size(), root_mult, &out), "gen focal");
      GraphPtr owned(out);
      emit_graph(out, format);
      return kExitOk;
    }
    if (*circular) {
      auto mult = parse_heavy(n, heavy);
      cc_graph* out = nullptr;
      check(cc_gen_circular(n, mult.data(), root_mult, &out), "gen circular");
      GraphPtr owned(out);
      emit_graph(out, format);
      return kExitOk;
    }
  } catch (const Failed& f) {
    return f.code;
  }
  std::cerr << app.help();
  return kExitError;
}

int main(int argc, char** argv) { return run(argc, argv); }
