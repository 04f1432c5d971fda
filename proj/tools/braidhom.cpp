// braidhom: command-line front end for the braid homomorphism toolkit.
//
// Exit codes: 0 ok, 1 counterexample / failed verification / precondition,
// 2 undecided (fuel exhausted), 3 malformed input.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidhom/cabling.hpp"
#include "braidhom/curves.hpp"
#include "braidhom/homs.hpp"
#include "braidhom/json_io.hpp"
#include "braidhom/lamination.hpp"
#include "braidhom/screens.hpp"
#include "braidhom/text_format.hpp"
#include "suites.hpp"

namespace {

using namespace braidhom;
using nlohmann::json;

enum Exit { Ok = 0, Failed = 1, Undecided = 2, Malformed = 3 };

struct Globals {
  std::size_t fuel = Fuel{}.steps;
  unsigned threads = default_threads();
  std::string format = "text";
  Fuel as_fuel() const { return Fuel{fuel}; }
  bool json() const { return format == "json"; }
};

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Homomorphism load_hom(const std::string& path) { return parse_hom(read_source(path)); }

std::string letters_json(const BraidWord& w) { return letters_to_string(w); }

void print(const Globals& g, const json& j, const std::string& text) {
  if (g.json())
    std::cout << j.dump() << "\n";
  else
    std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

StandardKind parse_kind(const std::string& name, const std::optional<int>& k, const std::optional<std::string>& conj,
                        int n) {
  if (name == "trivial") return StandardKind::Trivial;
  if (name == "inclusion") return StandardKind::Inclusion;
  if (name == "diagonal") return StandardKind::Diagonal;
  if (name == "flip-diagonal") return StandardKind::FlipDiagonal;
  if (name == "exceptional") return StandardKind::ExceptionalB4B3;
  if (name == "inversion") return StandardKind::Inversion;
  if (name == "cabling") {
    if (!k) throw parse_error("--kind cabling needs --k");
    return StandardKind::cabling(*k);
  }
  if (name == "inner") {
    if (!conj) throw parse_error("--kind inner needs --conjugator");
    return StandardKind::inner(parse_braid_word(*conj, n));
  }
  throw parse_error("unknown kind '" + name + "'");
}

json rotation_json(const RotationReport& rep, const std::vector<CurveSpec>& curves) {
  json ce = json::array();
  for (auto i : rep.counterexamples) ce.push_back(to_string(curves[rep.rows[i].curve]));
  return {{"counterexamples", ce}, {"curves", curves.size()}, {"k", rep.k},
          {"n", rep.n},           {"rows", rep.rows.size()},  {"undecided", rep.undecided}};
}

int suite_exit(const suites::Result& r) {
  if (r.undecided) return Undecided;
  return r.pass ? Ok : Failed;
}

json suite_json(const std::string& name, const suites::Result& r) {
  return {{"data", r.data}, {"failures", r.failures}, {"name", name},
          {"notes", r.notes}, {"pass", r.pass},        {"undecided", r.undecided}};
}

std::string suite_text(const std::string& name, const suites::Result& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << name << "\n";
  for (const auto& n : r.notes) os << "  " << n << "\n";
  os << "  " << r.data.dump() << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid group homomorphism toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--fuel", g.fuel, "handle-reduction step budget")
      ->envname("BRAIDHOM_FUEL")
      ->check(CLI::Range(std::size_t{10'000}, SIZE_MAX));
  app.add_option("--threads", g.threads, "worker threads")->envname("BRAIDHOM_THREADS")->check(CLI::Range(1u, 1024u));
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));

  // CLI11 silently drops environment values that fail validation.
  for (auto [var, lo, hi] : {std::tuple{"BRAIDHOM_FUEL", 10'000ull, ~0ull}, std::tuple{"BRAIDHOM_THREADS", 1ull, 1024ull}})
    if (const char* env = std::getenv(var)) {
      unsigned long long v = 0;
      const std::string_view s(env);
      const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || p != s.data() + s.size() || v < lo || v > hi) {
        std::cerr << "malformed input: " << var << "='" << env << "' must be an integer in [" << lo << ", " << hi
                  << "]\n";
        return Malformed;
      }
    }

  int code = Ok;

  // word -------------------------------------------------------------------
  auto* word = app.add_subcommand("word", "word problem queries");
  word->require_subcommand(1);
  std::string w1, w2;
  auto* w_reduce = word->add_subcommand("reduce", "handle-reduced form");
  w_reduce->add_option("word", w1, "braid word, e.g. 'B4: 1 2 -1'")->required();
  w_reduce->callback([&] {
    const auto w = parse_braid_word(w1);
    const auto r = HandleReducer(g.as_fuel()).reduce(w);
    print(g, {{"input", letters_json(w)}, {"reduced", letters_json(r)}, {"strands", w.strands()}}, to_string(r));
  });
  auto* w_trivial = word->add_subcommand("trivial", "is the word the identity");
  w_trivial->add_option("word", w1)->required();
  w_trivial->callback([&] {
    const bool t = is_trivial(parse_braid_word(w1), g.as_fuel());
    print(g, {{"trivial", t}}, bool_word(t));
  });
  auto* w_equal = word->add_subcommand("equal", "are two words the same braid");
  w_equal->alias("compare");
  w_equal->add_option("u", w1)->required();
  w_equal->add_option("v", w2)->required();
  w_equal->callback([&] {
    const auto u = parse_braid_word(w1);
    const bool e = words_equal(u, parse_braid_word(w2, u.strands()), g.as_fuel());
    print(g, {{"equal", e}}, bool_word(e));
  });
  auto* w_commute = word->add_subcommand("commute", "do two braids commute");
  w_commute->add_option("u", w1)->required();
  w_commute->add_option("v", w2)->required();
  w_commute->callback([&] {
    const auto u = parse_braid_word(w1);
    const bool c = commutes(u, parse_braid_word(w2, u.strands()), g.as_fuel());
    print(g, {{"commute", c}}, bool_word(c));
  });

  // curve ------------------------------------------------------------------
  auto* curve = app.add_subcommand("curve", "curves w(c_i), written 'Cn: i | letters'");
  curve->require_subcommand(1);
  std::string c1, c2, method = "word-problem";
  auto* c_coords = curve->add_subcommand("coords", "Dynnikov coordinates");
  c_coords->add_option("curve", c1)->required();
  c_coords->callback([&] {
    const auto L = curve_coords(parse_curve(c1));
    json a = json::array(), b = json::array();
    std::string text = "L" + std::to_string(L.strands()) + ":";
    auto put = [&](json& arr, const BigInt& x) {
      text += " " + x.str();
      if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        arr.push_back(x.convert_to<std::int64_t>());
      else
        arr.push_back(x.str());
    };
    for (const auto& x : L.a()) put(a, x);
    text += " |";
    for (const auto& x : L.b()) put(b, x);
    print(g, {{"a", a}, {"b", b}, {"strands", L.strands()}}, text);
  });
  auto* c_disjoint = curve->add_subcommand("disjoint", "equal, disjoint or intersecting");
  c_disjoint->add_option("c", c1)->required();
  c_disjoint->add_option("d", c2)->required();
  c_disjoint->add_option("--method", method)->check(CLI::IsMember({"word-problem", "prefilter"}));
  c_disjoint->callback([&] {
    const auto m = method == "prefilter" ? DisjointnessMethod::LaminationPrefilter : DisjointnessMethod::WordProblem;
    const auto v = curves_disjoint(parse_curve(c1), parse_curve(c2), m, g.as_fuel());
    print(g, {{"verdict", to_string(v)}}, to_string(v));
  });

  // hom --------------------------------------------------------------------
  auto* hom = app.add_subcommand("hom", "homomorphisms given as JSON files ('-' reads stdin)");
  hom->require_subcommand(1);
  std::string f1, f2;
  int k_max = 3;
  auto* h_make = hom->add_subcommand("make", "build a homomorphism from generator images");
  int make_source = 0, make_target = 0;
  std::vector<std::string> make_images;
  h_make->add_option("--source", make_source, "source strands")->required()->check(CLI::Range(2, 1000));
  h_make->add_option("--target", make_target, "target strands")->required()->check(CLI::Range(1, 1000));
  h_make->add_option("--image", make_images, "image of sigma_i as letters, once per generator in order")->required();
  h_make->add_flag("--verify", "fail unless the relations hold");
  h_make->callback([&] {
    std::vector<BraidWord> images;
    for (const auto& text : make_images) images.push_back(parse_braid_word(text, make_target));
    Homomorphism h(make_source, make_target, std::move(images));
    if (h_make->count("--verify")) {
      if (const auto bad = failing_relation(h, g.as_fuel())) {
        std::cerr << "fails " << bad->describe() << "\n";
        code = Failed;
        return;
      }
    }
    std::cout << to_json(h).dump() << "\n";
  });
  auto* h_verify = hom->add_subcommand("verify", "check every defining relation");
  h_verify->add_option("file", f1)->required();
  h_verify->callback([&] {
    const auto h = load_hom(f1);
    const auto bad = failing_relation(h, g.as_fuel());
    json j = {{"verified", !bad}};
    if (bad) j["failing_relation"] = bad->describe();
    print(g, j, bad ? "fails " + bad->describe() : std::string("verified"));
    if (bad) code = Failed;
  });
  auto* h_apply = hom->add_subcommand("apply", "image of a word");
  h_apply->add_option("file", f1)->required();
  h_apply->add_option("word", w1)->required();
  h_apply->callback([&] {
    const auto h = load_hom(f1);
    const auto img = apply_hom(h, parse_braid_word(w1, h.source_strands()));
    print(g, {{"image", letters_json(img)}, {"strands", img.strands()}}, to_string(img));
  });
  auto* h_transvect = hom->add_subcommand("transvect", "transvection by a centralizing element");
  h_transvect->add_option("file", f1)->required();
  h_transvect->add_option("word", w1)->required();
  h_transvect->callback([&] {
    const auto h = load_hom(f1);
    const auto t = transvect(h, parse_braid_word(w1, h.target_strands()), g.as_fuel());
    print(g, to_json(t), to_json(t).dump());
  });
  auto* h_compose = hom->add_subcommand("compose", "outer after inner");
  h_compose->add_option("outer", f1)->required();
  h_compose->add_option("inner", f2)->required();
  h_compose->callback([&] {
    if (f1 == "-" && f2 == "-") throw parse_error("only one argument may read stdin");
    const auto c = compose_hom(load_hom(f1), load_hom(f2));
    print(g, to_json(c), to_json(c).dump());
  });
  auto* h_fp = hom->add_subcommand("fingerprint", "equivalence fingerprint");
  h_fp->add_option("file", f1)->required();
  h_fp->callback([&] {
    auto h = load_hom(f1);
    if (!verify_hom(h, g.as_fuel())) throw precondition_error("not a homomorphism");
    const auto j = to_json(fingerprint(h, g.as_fuel()));
    print(g, j, j.dump(2));
  });
  auto* h_match = hom->add_subcommand("match", "standard maps B_n -> B_2n with the same fingerprint");
  h_match->add_option("file", f1)->required();
  h_match->add_option("--k-max", k_max)->check(CLI::Range(0, 50));
  h_match->callback([&] {
    auto h = load_hom(f1);
    if (!verify_hom(h, g.as_fuel())) throw precondition_error("not a homomorphism");
    const auto names = match_standard(h, k_max, g.as_fuel());
    std::string text = names.empty() ? "no match" : "";
    for (const auto& s : names) text += s + "\n";
    print(g, {{"matches", names}}, text);
  });

  // standard ---------------------------------------------------------------
  auto* standard = app.add_subcommand("standard", "print a standard homomorphism as JSON");
  std::string kind_name;
  std::optional<int> k_opt;
  std::optional<std::string> conj_opt;
  int n = 0;
  standard->add_option("--kind", kind_name)
      ->required()
      ->check(CLI::IsMember({"trivial", "inclusion", "diagonal", "flip-diagonal", "cabling", "exceptional",
                             "inversion", "inner"}));
  standard->add_option("--n", n, "source strands")->required()->check(CLI::Range(2, 1000));
  standard->add_option("--k", k_opt, "twist for cabling");
  standard->add_option("--conjugator", conj_opt, "letters for inner");
  standard->callback([&] {
    const auto h = standard_hom(parse_kind(kind_name, k_opt, conj_opt, n), n);
    std::cout << to_json(h).dump() << "\n";
  });

  // classify-cabling -------------------------------------------------------
  auto* classify = app.add_subcommand("classify-cabling", "k-twist cabling equivalent to a cabling map");
  classify->add_option("file", f1)->required();
  classify->callback([&] {
    auto h = load_hom(f1);
    if (!verify_hom(h, g.as_fuel())) throw precondition_error("not a homomorphism");
    const auto c = classify_cabling(h, g.as_fuel());
    json j = {{"center_exponent", c.center_exponent},
              {"certified", c.certified},
              {"conjugator_exponents", c.conjugator_exponents},
              {"interior_matrix", c.interior_matrix},
              {"k", c.k_canonical},
              {"transvection_exponent", c.transvection_exponent},
              {"x", c.x},
              {"y", c.y}};
    auto row = [](const std::vector<long>& v) {
      std::string t;
      for (long x : v) t += " " + std::to_string(x);
      return t;
    };
    std::string text = "k_canonical: " + std::to_string(c.k_canonical) + "\nx: " + std::to_string(c.x) +
                       "\ny: " + std::to_string(c.y) + "\n";
    for (std::size_t r = 0; r < c.interior_matrix.size(); ++r)
      text += "matrix[" + std::to_string(r + 1) + "]:" + row(c.interior_matrix[r]) + "\n";
    text += "m:" + row(c.conjugator_exponents) + "\ntransvection_exponent: " +
            std::to_string(c.transvection_exponent) + "\ncenter_exponent: " + std::to_string(c.center_exponent) +
            "\ncertified: " + bool_word(c.certified);
    print(g, j, text);
    if (!c.certified) code = Failed;
  });

  // screen -----------------------------------------------------------------
  auto* screen = app.add_subcommand("screen", "divisibility screen n(n-1) | m(m-1)");
  long sn = 0, m_max = 0, n_max = 50;
  bool corollary = false;
  screen->add_option("--n", sn)->check(CLI::Range(1L, 100000L));
  screen->add_option("--m-max", m_max)->check(CLI::Range(1L, 1000000L));
  screen->add_flag("--corollary", corollary, "list pairs n < m <= 2n, n >= 5, where the range check fails");
  screen->add_option("--n-max", n_max)->check(CLI::Range(5L, 100000L));
  screen->callback([&] {
    if (corollary) {
      json ex = json::array();
      std::string text;
      for (long a = 5; a <= n_max; ++a)
        for (long b = a + 1; b <= 2 * a; ++b)
          if (!corollary_range_check(a, b)) {
            ex.push_back({a, b});
            text += std::to_string(a) + " " + std::to_string(b) + "\n";
          }
      print(g, {{"exceptions", ex}, {"n_max", n_max}}, text.empty() ? "no exceptions" : text);
      if (!ex.empty()) code = Failed;
      return;
    }
    if (!sn || !m_max) throw parse_error("screen needs --n and --m-max (or --corollary --n-max)");
    json rows = json::array();
    std::string text;
    for (long m = 1; m <= m_max; ++m) {
      const bool s = special_constraint(sn, m);
      rows.push_back({sn, m, s});
      text += std::to_string(sn) + " " + std::to_string(m) + " " + bool_word(s) + "\n";
    }
    print(g, {{"rows", rows}}, text);
  });

  // verify-prop31 ----------------------------------------------------------
  auto* p31 = app.add_subcommand("verify-prop31", "alpha^k moves every enumerated curve off itself");
  int pn = 5, pk = 1, max_conj = 4;
  p31->add_option("--n", pn)->check(CLI::Range(3, 64));
  p31->add_option("--k", pk);
  p31->add_option("--max-conj", max_conj)->check(CLI::Range(0, 12));
  p31->add_option("--method", method)->check(CLI::IsMember({"word-problem", "prefilter"}));
  p31->callback([&] {
    const auto m = method == "prefilter" ? DisjointnessMethod::LaminationPrefilter : DisjointnessMethod::WordProblem;
    const auto curves = enumerate_curves(pn, max_conj);
    const auto rep = rotation_intersection_report(pn, pk, curves, m, g.as_fuel(), g.threads);
    const auto j = rotation_json(rep, curves);
    std::string text = std::to_string(curves.size()) + " curves, " + std::to_string(rep.counterexamples.size()) +
                       " counterexamples, " + std::to_string(rep.undecided) + " undecided";
    for (const auto& c : j["counterexamples"]) text += "\n  " + c.get<std::string>();
    print(g, j, text);
    code = !rep.counterexamples.empty() ? Failed : rep.undecided ? Undecided : Ok;
  });

  // verify-prop32 ----------------------------------------------------------
  auto* p32 = app.add_subcommand("verify-prop32", "search two-curve multicurves meeting the rotation hypothesis");
  std::string hyp = "alpha1";
  p32->add_option("--n", pn)->check(CLI::Range(5, 64));
  p32->add_option("--hypothesis", hyp)->check(CLI::IsMember({"alpha1", "alpha2"}));
  p32->add_option("--max-conj", max_conj)->check(CLI::Range(0, 12));
  p32->add_option("--method", method)->check(CLI::IsMember({"word-problem", "prefilter"}));
  p32->callback([&] {
    const auto m = method == "prefilter" ? DisjointnessMethod::LaminationPrefilter : DisjointnessMethod::WordProblem;
    const auto h = hyp == "alpha1" ? RotationHypothesis::Alpha1Range : RotationHypothesis::Alpha2Range;
    suites::Options o{g.as_fuel(), g.threads};
    const auto r = suites::prop32(o, pn, h, max_conj, m);
    print(g, suite_json("prop32", r), suite_text("prop32", r));
    code = suite_exit(r);
  });

  // verify-lemma61 ---------------------------------------------------------
  auto* l61 = app.add_subcommand("verify-lemma61", "decompose inverts embed_F on random elements");
  std::string pattern = "P: 2 2 2 2 2";
  int samples = 500;
  std::uint64_t seed = 61;
  l61->add_option("--pattern", pattern, "cable sizes, e.g. 'P: 2 3 1'");
  l61->add_option("--samples", samples)->check(CLI::Range(1, 10'000'000));
  l61->add_option("--seed", seed);
  l61->callback([&] {
    suites::Options o{g.as_fuel(), g.threads};
    const auto r = suites::lemma61(o, parse_cable_structure(pattern), samples, seed);
    print(g, suite_json("lemma61", r), suite_text("lemma61", r));
    code = suite_exit(r);
  });

  // enumerate-sym ----------------------------------------------------------
  auto* sym = app.add_subcommand("enumerate-sym", "homomorphisms B_n -> S_k");
  int sk = 3;
  std::uint64_t max_tuples = 1'000'000'000'000ull;
  sym->add_option("--n", pn)->check(CLI::Range(2, 64));
  sym->add_option("--k", sk)->check(CLI::Range(1, 8));
  sym->add_option("--max-tuples", max_tuples);
  sym->callback([&] {
    const auto rep = sym_hom_enumerate(pn, sk, max_tuples, g.threads);
    json j = {{"cyclic_solutions", rep.cyclic_solutions}, {"k", sk}, {"n", pn}, {"solutions", rep.solutions}};
    std::string text = std::to_string(rep.solutions) + " homomorphisms, " + std::to_string(rep.cyclic_solutions) +
                       " with cyclic image";
    if (rep.non_cyclic_example) {
      json ex = json::array();
      text += "\nnon-cyclic example:";
      for (const auto& p : *rep.non_cyclic_example) {
        std::vector<int> images;
        for (int i = 1; i <= sk; ++i) images.push_back(p(i));
        ex.push_back(images);
        text += " [";
        for (std::size_t i = 0; i < images.size(); ++i) text += (i ? " " : "") + std::to_string(images[i]);
        text += "]";
      }
      j["non_cyclic_example"] = ex;
    }
    print(g, j, text);
  });

  // suite ------------------------------------------------------------------
  auto* suite = app.add_subcommand("suite", "run a reproduction suite by name ('list' shows them)");
  std::string suite_name;
  std::vector<int> suite_ns;
  std::optional<int> suite_max_conj;
  suite->add_option("name", suite_name)->required();
  suite->add_option("--n", suite_ns, "strand counts (prop31, prop32, fingerprints, centralizers)")
      ->check(CLI::Range(3, 64));
  suite->add_option("--max-conj", suite_max_conj, "conjugator length cutoff (prop31, prop32)")
      ->check(CLI::Range(0, 12));
  suite->callback([&] {
    const auto cat = suites::catalog();
    if (suite_name == "list") {
      json j = json::array();
      std::string text;
      for (const auto& e : cat) {
        j.push_back({{"criterion", e.criterion}, {"name", e.name}, {"summary", e.summary}});
        text += e.name + "  " + e.summary + "\n";
      }
      print(g, j, text);
      return;
    }
    const suites::Options o{g.as_fuel(), g.threads};
    const bool custom = !suite_ns.empty() || suite_max_conj;
    std::function<suites::Result()> custom_run;
    if (suite_name == "prop31") {
      custom_run = [&] {
        return suites::prop31(o, suite_ns.empty() ? std::vector<int>{5, 6} : suite_ns, {1, 2}, suite_max_conj.value_or(4));
      };
    } else if (suite_name == "prop32") {
      if (suite_ns.size() > 1) throw parse_error("prop32 takes one --n");
      custom_run = [&] {
        return suites::prop32(o, suite_ns.empty() ? 5 : suite_ns.front(), RotationHypothesis::Alpha1Range,
                              suite_max_conj.value_or(4));
      };
    } else if (suite_name == "fingerprints" || suite_name == "centralizers") {
      if (suite_max_conj) throw parse_error(suite_name + " takes no --max-conj");
      if (suite_ns.size() > 1) throw parse_error(suite_name + " takes one --n");
      custom_run = [&] {
        const int sn5 = suite_ns.empty() ? 5 : suite_ns.front();
        return suite_name == "fingerprints" ? suites::fingerprints(o, sn5) : suites::centralizers(o, sn5);
      };
    } else if (custom) {
      throw parse_error("suite '" + suite_name + "' takes no parameters");
    }
    for (const auto& e : cat)
      if (e.name == suite_name) {
        const auto r = custom ? custom_run() : e.run(o);
        print(g, suite_json(e.name, r), suite_text(e.name, r));
        code = suite_exit(r);
        return;
      }
    throw parse_error("unknown suite '" + suite_name + "'");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? Ok : Malformed;
  } catch (const undecided_error& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return Undecided;
  } catch (const centralizer_error& e) {
    std::cerr << "not centralizing: " << e.what() << "\n";
    return Failed;
  } catch (const precondition_error& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return Failed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return Malformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Failed;
  }
  return code;
}
