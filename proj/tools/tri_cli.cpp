// tri: decide simultaneous triangularizability of matrix families given as
// JSON family files, over the rationals, prime fields, and rational
// quaternions. Exit codes: 0 triangularizable, 1 refuted, 2 input error,
// 3 resource bound exceeded.

#include <cstdint>
#include <fstream>
#include <limits>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "tri/engine.hpp"
#include "tri/io.hpp"
#include "tri/testkit.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInput = 2;
constexpr int kExitBound = 3;

struct Options {
  std::string input;
  std::string chain_path;
  std::string mode_override;
  std::string emit_chain;
  int closure_bound = tri::kDefaultClosureBound;
  bool finite = false;
  std::uint64_t max_prime = 1000000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tri::io::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

template <class K>
void print_witness(const tri::Witness<K>& w) {
  std::cout << "verdict: not triangularizable\n";
  std::cout << "witness: " << tri::witness_kind_name(w.kind) << "\n";
  if (!w.word.empty()) std::cout << "word: " << w.word << "\n";
  if (!w.note.empty()) std::cout << "note: " << w.note << "\n";
  if (!w.elements.empty()) std::cout << "element: " << w.elements.front().str() << "\n";
  bool ok = tri::recheck_witness(w);
  std::cout << "witness re-check: " << (ok ? "reproduced" : "FAILED") << "\n";
}

template <class K>
int report(const tri::ScalarRing& ring, const std::vector<tri::Matrix<K>>& gens,
           const tri::Verdict<K>& v, const Options& opt) {
  for (const auto& line : v.log) std::cout << "# " << line << "\n";
  if (v.bound_exceeded) {
    std::cout << "verdict: resource bound exceeded\n";
    return kExitBound;
  }
  if (v.witness) {
    print_witness(*v.witness);
    return kExitRefuted;
  }
  tri::ChainVerification check = tri::verify_chain(gens, *v.chain);
  if (!check.ok) {
    std::cerr << "internal error: emitted chain failed verification: " << check.message << "\n";
    return kExitInput;
  }
  std::cout << "verdict: triangularizable\n";
  for (size_t j = 0; j < v.chain->spaces.size(); ++j) {
    std::cout << "V_" << j << " dim " << v.chain->spaces[j].dim();
    if (v.chain->spaces[j].dim() > 0) {
      std::cout << " basis columns of " << v.chain->spaces[j].basis_matrix().str();
    }
    std::cout << "\n";
  }
  if (!opt.emit_chain.empty()) write_file(opt.emit_chain, tri::io::print_chain(ring, *v.chain));
  return kExitOk;
}

// auto mode: most specific theorem first
template <class K>
std::string dispatch_mode(const std::vector<tri::Matrix<K>>& gens) {
  bool nil = true, uni = true, singleton = true;
  for (const auto& g : gens) {
    if (!tri::is_nilpotent(g)) nil = false;
    if (!tri::is_unipotent(g)) uni = false;
    if (!tri::detail::scalar_part(g)) singleton = false;
  }
  if (nil) return "levitzki";
  if (uni) return "kolchin";
  if (singleton) return "kaplansky";
  return "general";
}

template <class K>
int run_triangularize(const tri::io::FamilyFile& f, const std::string& raw, const Options& opt) {
  int bound = f.closure_bound.value_or(opt.closure_bound);
  bool finite = f.finite || opt.finite;
  std::string mode = opt.mode_override.empty() ? f.mode : opt.mode_override;

  if (mode == "tn") {
    auto pairs = tri::io::materialize_tn_pairs<K>(f, raw);
    auto made = tri::make_tn_family(std::move(pairs));
    if (std::holds_alternative<tri::Witness<K>>(made)) {
      print_witness(std::get<tri::Witness<K>>(made));
      return kExitRefuted;
    }
    const auto& fam = std::get<tri::TnFamily<K>>(made);
    return report(f.ring, fam.sums(), tri::tn_triangularize(f.n, fam, bound, finite), opt);
  }

  std::vector<tri::Matrix<K>> gens = tri::io::materialize_generators<K>(f, raw);
  if (mode == "irreducible") {
    bool irr = tri::irreducibility_test(f.n, gens);
    std::cout << "irreducible: " << (irr ? "true" : "false") << "\n";
    return irr ? kExitOk : kExitRefuted;
  }
  if (mode == "auto") mode = dispatch_mode(gens);
  std::cout << "# mode: " << mode << "\n";
  if (mode == "levitzki") return report(f.ring, gens, tri::levitzki_chain(f.n, gens, bound), opt);
  if (mode == "kolchin") return report(f.ring, gens, tri::kolchin_chain(f.n, gens, bound), opt);
  if (mode == "kaplansky") return report(f.ring, gens, tri::kaplansky_chain(f.n, gens, bound), opt);
  // general decision procedure exists over fields only
  if constexpr (tri::scalar_traits<K>::commutative) {
    return report(f.ring, gens, tri::triangularize_general(f.n, gens), opt);
  } else {
    std::cerr << "error: quaternion families outside the singleton-spectrum hypotheses need "
                 "mode tn or kaplansky; the general decision is field-only\n";
    return kExitInput;
  }
}

template <class K>
int run_verify(const tri::io::FamilyFile& f, const std::string& raw, const Options& opt) {
  std::vector<tri::Matrix<K>> gens;
  if (f.mode == "tn") {
    for (const auto& [t, n] : tri::io::materialize_tn_pairs<K>(f, raw)) gens.push_back(t + n);
  } else {
    gens = tri::io::materialize_generators<K>(f, raw);
  }
  tri::Chain<K> chain = tri::io::parse_chain<K>(read_file(opt.chain_path));
  tri::ChainVerification check = tri::verify_chain(gens, chain);
  if (check.ok) {
    std::cout << "chain verifies\n";
    return kExitOk;
  }
  std::cout << "chain rejected: " << check.message << "\n";
  return kExitRefuted;
}

template <class K>
int run_spectrum(const tri::io::FamilyFile& f, const std::string& raw) {
  std::vector<tri::Matrix<K>> gens = tri::io::materialize_generators<K>(f, raw);
  for (size_t i = 0; i < gens.size(); ++i) {
    std::cout << "g" << (i + 1) << ": ";
    if (auto lambda = tri::detail::scalar_part(gens[i])) {
      std::cout << "singleton spectrum {" << tri::scalar_traits<K>::str(*lambda) << "}\n";
      continue;
    }
    std::cout << "none";
    if constexpr (tri::scalar_traits<K>::commutative) {
      auto spec = tri::eigenvalues_in_field(gens[i]);
      std::cout << " (spectrum {";
      for (size_t k = 0; k < spec.eigenvalues.size(); ++k) {
        if (k) std::cout << ",";
        std::cout << tri::scalar_traits<K>::str(spec.eigenvalues[k].first);
      }
      std::cout << "}" << (spec.split ? "" : ", not split") << ")";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

template <class K>
int run_closure(const tri::io::FamilyFile& f, const std::string& raw, const Options& opt) {
  std::vector<tri::Matrix<K>> gens = tri::io::materialize_generators<K>(f, raw);
  int bound = f.closure_bound.value_or(opt.closure_bound);
  tri::ClosureResult<K> cl = tri::semigroup_closure(gens, bound);
  std::cout << "elements: " << cl.elements.size() << "\n";
  std::cout << "complete: " << (cl.complete ? "true" : "false") << "\n";
  if (!cl.complete && (f.finite || opt.finite)) return kExitBound;
  return kExitOk;
}

template <class Fn>
int with_ring(const tri::io::FamilyFile& f, std::uint64_t max_prime, Fn&& fn) {
  switch (f.ring.tag) {
    case tri::RingTag::Rational:
      return fn.template operator()<tri::Rational>();
    case tri::RingTag::PrimeField: {
      if (f.ring.characteristic > max_prime) {
        std::cerr << "error: prime " << f.ring.characteristic << " exceeds --max-prime "
                  << max_prime << "\n";
        return kExitInput;
      }
      tri::GfScope scope(f.ring.characteristic);
      return fn.template operator()<tri::GfElem>();
    }
    case tri::RingTag::Quaternion:
      return fn.template operator()<tri::Quaternion>();
  }
  return kExitInput;
}

int run_random(const std::string& kind, int n, std::uint64_t seed, const std::string& scalar,
               int num_generators, const std::string& output) {
  tri::testkit::InstanceRecipe recipe;
  recipe.n = n;
  recipe.seed = seed;
  recipe.num_generators = num_generators;
  std::string mode = "auto";
  if (kind == "nilpotent") {
    recipe.kind = tri::testkit::InstanceKind::Nilpotent;
    mode = "levitzki";
  } else if (kind == "unipotent") {
    recipe.kind = tri::testkit::InstanceKind::Unipotent;
    mode = "kolchin";
  } else if (kind == "kaplansky") {
    recipe.kind = tri::testkit::InstanceKind::KaplanskyField;
    mode = "kaplansky";
  } else if (kind == "tn") {
    recipe.kind = tri::testkit::InstanceKind::TnFamilyRecipe;
    mode = "tn";
  } else if (kind == "general") {
    recipe.kind = tri::testkit::InstanceKind::General;
  } else {
    std::cerr << "error: unknown kind '" << kind
              << "' (expected nilpotent, unipotent, kaplansky, tn, general)\n";
    return kExitInput;
  }
  tri::ScalarRing ring = tri::io::detail::parse_ring_name(scalar);
  tri::io::FamilyFile f;
  auto build = [&]<class K>() -> int {
    if (recipe.kind == tri::testkit::InstanceKind::TnFamilyRecipe) {
      std::vector<std::pair<tri::Matrix<K>, tri::Matrix<K>>> pairs;
      tri::testkit::gen_tn_family<K>(recipe, &pairs);
      f.ring = ring;
      f.n = n;
      f.mode = "tn";
      for (const auto& [t, nn] : pairs)
        f.tn_pairs.push_back({tri::io::matrix_to_text(t), tri::io::matrix_to_text(nn)});
    } else {
      auto inst = tri::testkit::gen_conjugated_flag_family<K>(recipe);
      f = tri::io::family_file_from(ring, inst.generators, mode);
    }
    return kExitOk;
  };
  f.ring = ring;
  int rc = with_ring(f, std::numeric_limits<std::uint64_t>::max(), build);
  if (rc != kExitOk) return rc;
  std::string text = tri::io::print_family_file(f);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    write_file(output, text);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact simultaneous triangularization of matrix families"};
  app.require_subcommand(1);
  Options opt;

  auto* tri_cmd = app.add_subcommand("triangularize", "decide and emit a chain or witness");
  tri_cmd->add_option("--input", opt.input, "family file (JSON)")->required();
  tri_cmd->add_option("--mode", opt.mode_override, "override the file's mode");
  tri_cmd->add_option("--closure-bound", opt.closure_bound, "semigroup closure element cap");
  tri_cmd->add_flag("--finite", opt.finite, "require a finite (complete) closure");
  tri_cmd->add_option("--emit-chain", opt.emit_chain, "write the chain as JSON");
  tri_cmd->add_option("--max-prime", opt.max_prime, "largest accepted field characteristic");

  auto* verify_cmd = app.add_subcommand("verify", "check a chain file against a family");
  verify_cmd->add_option("--input", opt.input, "family file (JSON)")->required();
  verify_cmd->add_option("--chain", opt.chain_path, "chain file (JSON)")->required();
  verify_cmd->add_option("--max-prime", opt.max_prime, "largest accepted field characteristic");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "per-generator spectra");
  spectrum_cmd->add_option("--input", opt.input, "family file (JSON)")->required();
  spectrum_cmd->add_option("--max-prime", opt.max_prime, "largest accepted field characteristic");

  auto* closure_cmd = app.add_subcommand("closure", "closure size and completeness");
  closure_cmd->add_option("--input", opt.input, "family file (JSON)")->required();
  closure_cmd->add_option("--closure-bound", opt.closure_bound, "semigroup closure element cap");
  closure_cmd->add_flag("--finite", opt.finite, "exit 3 when the closure bound is hit");
  closure_cmd->add_option("--max-prime", opt.max_prime, "largest accepted field characteristic");

  std::string rnd_kind = "general", rnd_scalar = "rational", rnd_output;
  int rnd_n = 2, rnd_gens = 2;
  std::uint64_t rnd_seed = 0;
  auto* random_cmd = app.add_subcommand("random", "materialize a seeded recipe to a family file");
  random_cmd->add_option("--kind", rnd_kind, "nilpotent|unipotent|kaplansky|tn|general");
  random_cmd->add_option("--n", rnd_n, "matrix dimension")->check(CLI::PositiveNumber);
  random_cmd->add_option("--seed", rnd_seed, "recipe seed");
  random_cmd->add_option("--scalar", rnd_scalar, "rational|gfp:<p>|quaternion");
  random_cmd->add_option("--generators", rnd_gens, "number of generators");
  random_cmd->add_option("--output", rnd_output, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (random_cmd->parsed())
      return run_random(rnd_kind, rnd_n, rnd_seed, rnd_scalar, rnd_gens, rnd_output);

    std::string raw = read_file(opt.input);
    tri::io::FamilyFile f = tri::io::parse_family_file(raw);
    if (tri_cmd->parsed())
      return with_ring(f, opt.max_prime,
                       [&]<class K>() { return run_triangularize<K>(f, raw, opt); });
    if (verify_cmd->parsed())
      return with_ring(f, opt.max_prime, [&]<class K>() { return run_verify<K>(f, raw, opt); });
    if (spectrum_cmd->parsed())
      return with_ring(f, opt.max_prime, [&]<class K>() { return run_spectrum<K>(f, raw); });
    if (closure_cmd->parsed())
      return with_ring(f, opt.max_prime, [&]<class K>() { return run_closure<K>(f, raw, opt); });
  } catch (const tri::io::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
