// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROID_CLI_HPP_
#define MATROID_CLI_HPP_

// Command-line front end. Each verb is a thin adapter over one library call.
//
// Exit status: 0 success or true, 1 predicate false, 2 usage error,
// 3 invalid matroid input.

#include <cstddef>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "matroid/catalog_io.hpp"
#include "matroid/enumeration.hpp"
#include "matroid/free_product.hpp"
#include "matroid/iso.hpp"
#include "matroid/literal.hpp"
#include "matroid/matroid.hpp"
#include "matroid/verify.hpp"
#include "matroid/weak_map.hpp"

namespace matroid::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFalse = 1,
  kUsage = 2,
  kInvalidInput = 3,
};

// Raised for arity and option problems; maps to kUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised while decoding an operand; maps to kInvalidInput.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operand is a '+'-joined direct sum of terms; a term is a matroid
// literal or one of uniform:k,n  free:n  zero:n.
inline Matroid parse_operand(std::string_view text) {
  auto term = [&](std::string_view t) -> Matroid {
    auto args = [&](std::string_view rest) {
      std::vector<std::size_t> out;
      for (std::string_view part : detail::split(rest, ',')) {
        out.push_back(detail::parse_index(part, t));
      }
      return out;
    };
    auto expect = [&](const std::vector<std::size_t>& v, std::size_t count) {
      if (v.size() != count) throw Error(Errc::kParse, "wrong argument count in '" + std::string(t) + "'");
    };
    if (t.rfind("uniform:", 0) == 0) {
      auto v = args(t.substr(8));
      expect(v, 2);
      return uniform(v[0], v[1]);
    }
    if (t.rfind("free:", 0) == 0) {
      auto v = args(t.substr(5));
      expect(v, 1);
      return free_matroid(v[0]);
    }
    if (t.rfind("zero:", 0) == 0) {
      auto v = args(t.substr(5));
      expect(v, 1);
      return zero_matroid(v[0]);
    }
    return parse_matroid(t);
  };
  try {
    std::optional<Matroid> sum;
    for (std::string_view part : detail::split(text, '+')) {
      Matroid m = term(part);
      sum = sum ? direct_sum(*sum, m) : std::move(m);
    }
    return *sum;
  } catch (const Error& e) {
    throw InputError(std::string("invalid matroid '") + std::string(text) + "': " + e.what());
  }
}

inline SubsetMask parse_subset_operand(std::string_view text, std::size_t width) {
  try {
    return parse_subset(text, width);
  } catch (const Error& e) {
    throw InputError(std::string("invalid subset '") + std::string(text) + "': " + e.what());
  }
}

inline std::size_t parse_count(std::string_view text) {
  try {
    return detail::parse_index(text, text);
  } catch (const Error&) {
    throw UsageError("expected a non-negative integer, got '" + std::string(text) + "'");
  }
}

struct Options {
  std::string out_path;
  std::size_t workers = 1;
  std::size_t scale = 7;
  bool quiet = false;
};

namespace detail {

inline void arity(const std::vector<std::string>& args, std::size_t min, std::size_t max,
                  const std::string& verb) {
  if (args.size() < min || args.size() > max) {
    std::string range = std::to_string(min);
    if (max == std::numeric_limits<std::size_t>::max()) {
      range = "at least " + range;
    } else if (max != min) {
      range += " to " + std::to_string(max);
    }
    throw UsageError(verb + ": expected " + range + " arguments, got " +
                     std::to_string(args.size()));
  }
}

inline void print_report(const VerificationReport& report, bool quiet, std::ostream& out) {
  for (const CheckTally& t : report.tallies()) {
    if (quiet && t.failed == 0) continue;
    out << (t.failed == 0 ? "PASS " : "FAIL ") << t.name << ' ' << t.passed << '/'
        << (t.passed + t.failed);
    if (t.failed != 0) out << " first=" << t.first_failure;
    out << '\n';
  }
  out << (report.all_passed() ? "verify: all checks passed" : "verify: failures") << '\n';
}

// Runs one verb; writes results to `out` and returns the exit code.
inline int dispatch(const std::string& verb, const std::vector<std::string>& args,
                    const Options& opt, std::ostream& out) {
  if (verb == "parse") {
    arity(args, 1, 1, verb);
    out << to_literal(parse_operand(args[0])) << '\n';
    return kSuccess;
  }
  if (verb == "rank") {
    arity(args, 2, 2, verb);
    const Matroid m = parse_operand(args[0]);
    const SubsetMask a = parse_subset_operand(args[1], m.size());
    out << "rank=" << rank(m, a) << " nullity=" << nullity(m, a)
        << " lack=" << rank_lack(m, a) << '\n';
    return kSuccess;
  }
  if (verb == "dual") {
    arity(args, 1, 1, verb);
    out << to_literal(dual(parse_operand(args[0]))) << '\n';
    return kSuccess;
  }
  if (verb == "restrict" || verb == "contract") {
    arity(args, 2, 2, verb);
    const Matroid m = parse_operand(args[0]);
    const SubsetMask a = parse_subset_operand(args[1], m.size());
    out << to_literal(verb == "restrict" ? restrict_to(m, a) : contract(m, a)) << '\n';
    return kSuccess;
  }
  if (verb == "dsum" || verb == "freeprod") {
    arity(args, 2, SIZE_MAX, verb);
    // Left fold; the free product is not assumed to be associative.
    Matroid acc = parse_operand(args[0]);
    for (std::size_t i = 1; i < args.size(); ++i) {
      const Matroid next = parse_operand(args[i]);
      acc = verb == "dsum" ? direct_sum(acc, next) : free_product(acc, next);
    }
    out << to_literal(acc) << '\n';
    return kSuccess;
  }
  if (verb == "iso") {
    arity(args, 2, 2, verb);
    const auto phi = is_isomorphic(parse_operand(args[0]), parse_operand(args[1]));
    out << (phi ? to_literal(*phi) : std::string("none")) << '\n';
    return phi ? kSuccess : kFalse;
  }
  if (verb == "weakmap") {
    arity(args, 2, 3, verb);
    const Matroid p = parse_operand(args[0]);
    const Matroid q = parse_operand(args[1]);
    if (args.size() == 3) {
      Bijection phi;
      try {
        phi = parse_bijection(args[2]);
      } catch (const Error& e) {
        throw InputError(std::string("invalid bijection: ") + e.what());
      }
      if (phi.size() != p.size()) throw UsageError("bijection size does not match the matroids");
      const bool weak = is_weak_map(p, q, phi);
      out << "weak=" << (weak ? "yes" : "no") << '\n';
      return weak ? kSuccess : kFalse;
    }
    const auto phi = find_weak_map(p, q);
    out << (phi ? to_literal(*phi) : std::string("none")) << '\n';
    return phi ? kSuccess : kFalse;
  }
  if (verb == "recover") {
    arity(args, 2, 2, verb);
    const Matroid l = parse_operand(args[0]);
    const std::size_t k = parse_count(args[1]);
    if (k > l.size()) throw UsageError("recover: k exceeds the ground set size");
    try {
      const FactorSplit split = recover_factors(l, k);
      out << "left=" << to_literal(split.left) << '\n'
          << "right=" << to_literal(split.right) << '\n'
          << "witness=" << to_literal(split.witness) << '\n';
      return kSuccess;
    } catch (const Error& e) {
      if (e.code() != Errc::kNotAFreeProduct) throw;
      out << "none\n";
      return kFalse;
    }
  }
  if (verb == "factcount") {
    arity(args, 3, 3, verb);
    const Matroid l = parse_operand(args[0]);
    const Matroid m = parse_operand(args[1]);
    const Matroid n = parse_operand(args[2]);
    if (l.size() != m.size() + n.size()) throw UsageError("factcount: sizes do not add up");
    out << count_factorizations(l, m, n) << '\n';
    return kSuccess;
  }
  if (verb == "enumerate") {
    arity(args, 1, 1, verb);
    const std::size_t n = parse_count(args[0]);
    if (n > kMaxCatalogSize) throw UsageError("enumerate: n is limited to 7");
    out << format_catalog(enumerate_matroids(n, opt.workers));
    return kSuccess;
  }
  if (verb == "welsh") {
    arity(args, 2, 2, verb);
    const std::size_t n = parse_count(args[0]);
    const std::size_t m = parse_count(args[1]);
    if (n > kMaxCatalogSize || m > kMaxCatalogSize) {
      throw UsageError("welsh: sizes are limited to 7");
    }
    const WelshResult r = welsh_check(n, m, opt.workers);
    out << "products=" << r.products << " distinct=" << r.distinct
        << " injective=" << (r.injective ? "yes" : "no") << '\n';
    return r.injective ? kSuccess : kFalse;
  }
  if (verb == "verify") {
    if (args.size() != 0 && args.size() != 2) {
      throw UsageError("verify: expected no arguments or a pair of matroids");
    }
    const VerificationReport report =
        args.empty() ? verify_catalog_pairs(opt.scale, opt.workers)
                     : verify_pair(parse_operand(args[0]), parse_operand(args[1]));
    print_report(report, opt.quiet, out);
    return report.all_passed() ? kSuccess : kFalse;
  }
  throw UsageError("unknown verb '" + verb + "'");
}

}  // namespace detail

inline const std::vector<std::pair<std::string, std::string>>& verbs() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"parse", "normalize a matroid operand: parse <M>"},
      {"rank", "rank, nullity and rank-lack of a subset: rank <M> <A>"},
      {"dual", "dual matroid: dual <M>"},
      {"restrict", "restriction to a subset: restrict <M> <A>"},
      {"contract", "contraction of a subset: contract <M> <A>"},
      {"dsum", "direct sum, folded left: dsum <M> <N>..."},
      {"freeprod", "free product, folded left: freeprod <M> <N>..."},
      {"iso", "isomorphism test: iso <M> <N>"},
      {"weakmap", "check or find a bijective weak map: weakmap <P> <Q> [<phi>]"},
      {"recover", "recover ordered factors: recover <L> <k>"},
      {"factcount", "count factorizations: factcount <L> <M> <N>"},
      {"enumerate", "catalog of matroids on n elements: enumerate <n>"},
      {"welsh", "injectivity of the free product on catalogs: welsh <n> <m>"},
      {"verify", "structural checks: verify [<M> <N>]"},
  };
  return table;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroid algebra and free-product toolkit", "matroid"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--out", opt.out_path, "write results to this file");
  app.add_option("--workers", opt.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--scale", opt.scale, "largest n+m for verify over catalogs")
      ->check(CLI::Range(0, 8));
  app.add_flag("--quiet", opt.quiet, "report only failures");

  std::map<std::string, std::vector<std::string>> positional;
  for (const auto& [name, help] : verbs()) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("args", positional[name], "operands");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "matroid: " << e.what() << '\n';
    return kUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  std::ostringstream buffer;
  int code = kSuccess;
  try {
    code = detail::dispatch(verb, positional[verb], opt, buffer);
  } catch (const UsageError& e) {
    err << "matroid: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "matroid: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    err << "matroid: " << e.what() << '\n';
    return e.code() == Errc::kParse ? kInvalidInput : kUsage;
  }

  if (opt.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file || !(file << buffer.str())) {
      err << "matroid: cannot write " << opt.out_path << '\n';
      return kUsage;
    }
  }
  return code;
}

}  // namespace matroid::cli

#endif  // MATROID_CLI_HPP_
