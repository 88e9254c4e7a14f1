// rackiso: word problem, isotropy elements and verification sweeps for
// free racks and quandles.
//
// Exit status: 0 affirmative, 1 negative, 2 input error.

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include "rackiso/rackiso.hpp"

namespace {

using namespace rackiso;
using nlohmann::json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;

struct Config {
  std::string theory = "quandle";
  std::uint32_t gens = 0;
  bool json = false;
  std::uint64_t seed = 0;
  bool no_aux = false;

  Theory th() const { return theory == "rack" ? Theory::Rack : Theory::Quandle; }
  ParseOptions popts() const { return ParseOptions{!no_aux}; }
};

Term parse(const Config& c, const std::string& s, std::uint32_t n) {
  return parse_term(s, n, c.popts());
}

// Quandle text form: a word ("y1 y2^-1", "e"). Rack text form: "z:word"
// ("2:y1", "-1:e").
IsoElem parse_elem(const Config& c, const std::string& s, std::uint32_t n) {
  const auto first = s.find_first_not_of(" \t");
  if (first != std::string::npos && s[first] == '{') {
    json j;
    try {
      j = json::parse(s);
    } catch (const json::parse_error& e) {
      throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    IsoElem e = elem_from_json(j, n);
    const bool is_rack = std::holds_alternative<RackIsoElem>(e);
    if (is_rack != (c.th() == Theory::Rack))
      throw SchemaError("element theory does not match --theory " + c.theory);
    return e;
  }
  auto word = [&](std::string_view text) {
    GroupWord w = reduce(parse_word(text, n));
    if (!is_generator_only(w)) throw SchemaError("element words use generators only");
    return w;
  };
  if (c.th() == Theory::Quandle) return QuandleIsoElem{word(s)};
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw SyntaxError(0, "rack element must be 'z:word'");
  std::string_view zs(s.data(), colon);
  while (!zs.empty() && zs.front() == ' ') zs.remove_prefix(1);
  while (!zs.empty() && zs.back() == ' ') zs.remove_suffix(1);
  long z = 0;
  auto [p, ec] = std::from_chars(zs.data(), zs.data() + zs.size(), z);
  if (zs.empty() || ec != std::errc() || p != zs.data() + zs.size())
    throw SyntaxError(0, "malformed integer before ':'");
  return RackIsoElem{z, word(std::string_view(s).substr(colon + 1))};
}

std::string elem_text(const IsoElem& e) {
  if (auto q = std::get_if<QuandleIsoElem>(&e)) return render_word(q->word);
  const auto& r = std::get<RackIsoElem>(e);
  return std::to_string(r.z) + ":" + render_word(r.word);
}

void print_elem(const Config& c, const IsoElem& e) {
  if (c.json)
    std::cout << to_json(e).dump() << "\n";
  else
    std::cout << elem_text(e) << "\n";
}

int verdict(const Config& c, bool yes, const char* yes_text, const char* no_text) {
  if (c.json)
    std::cout << json{{"result", yes ? yes_text : no_text}}.dump() << "\n";
  else
    std::cout << (yes ? yes_text : no_text) << "\n";
  return yes ? kYes : kNo;
}

int cmd_eq(const Config& c, const std::string& a, const std::string& b) {
  return verdict(c, theory_equal(c.th(), parse(c, a, c.gens), parse(c, b, c.gens)), "equal",
                 "not-equal");
}

// One "t1 ; t2" pair per line. Exit 0 iff every pair is equal; input
// errors are reported per line and make the exit status 2.
int cmd_eq_stdin(const Config& c) {
  int status = kYes;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(std::cin, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto semi = line.find(';');
    try {
      if (semi == std::string::npos) throw SyntaxError(line.size(), "expected 't1 ; t2'");
      const int r = cmd_eq(c, line.substr(0, semi), line.substr(semi + 1));
      if (r == kNo && status == kYes) status = kNo;
    } catch (const std::invalid_argument& e) {
      std::cerr << "line " << lineno << ": " << e.what() << "\n";
      status = kInputError;
      std::cout << "error\n";
    }
  }
  return status;
}

int cmd_nf(const Config& c, const std::string& s) {
  const Term t = parse(c, s, c.gens);
  if (c.th() == Theory::Quandle) {
    const GroupWord w = quandle_word(t);
    if (c.json)
      std::cout << json{{"word", word_to_json(w)}}.dump() << "\n";
    else
      std::cout << render_word(w) << "\n";
    return kYes;
  }
  const RackNF nf = rack_normal_form(t);
  if (c.json)
    std::cout << json{{"head", nf.head.str()}, {"tail", word_to_json(nf.tail)}}.dump() << "\n";
  else
    std::cout << "head: " << nf.head.str() << ", tail: " << render_word(nf.tail) << "\n";
  return kYes;
}

int cmd_canon(const Config& c, const std::string& s) {
  const Term t = parse(c, s, c.gens);
  std::optional<IsoElem> e;
  if (c.th() == Theory::Quandle) {
    if (auto q = quandle_canonical(t, c.gens)) e = *q;
  } else if (auto r = rack_canonical(t, c.gens)) {
    e = *r;
  }
  if (!e) return verdict(c, false, "", "not-isotropy");
  print_elem(c, *e);
  return kYes;
}

int cmd_mul(const Config& c, const std::vector<std::string>& elems) {
  IsoElem acc = c.th() == Theory::Quandle ? IsoElem{QuandleIsoElem{}} : IsoElem{RackIsoElem{}};
  for (const auto& s : elems) {
    const IsoElem e = parse_elem(c, s, c.gens);
    acc = std::visit(
        [&](const auto& a) -> IsoElem {
          return multiply(a, std::get<std::decay_t<decltype(a)>>(e));
        },
        acc);
  }
  print_elem(c, acc);
  return kYes;
}

int cmd_inv(const Config& c, const std::string& s) {
  print_elem(c, std::visit([](const auto& a) -> IsoElem { return inverse(a); },
                           parse_elem(c, s, c.gens)));
  return kYes;
}

// The element lives over the source generators y1..yk (k = number of
// images); images and q are terms over the --gens target generators.
int cmd_apply(const Config& c, const std::string& elem, const std::string& q,
              const std::vector<std::string>& image_text) {
  std::vector<Term> images;
  for (const auto& s : image_text) images.push_back(parse(c, s, c.gens));
  const auto k = static_cast<std::uint32_t>(images.size());
  const IsoElem e = parse_elem(c, elem, k);
  const Term qt = parse(c, q, c.gens);
  const Term out =
      std::visit([&](const auto& a) { return apply_inner(a, images, qt, k); }, e);
  if (c.json)
    std::cout << json{{"term", render_term(out)}}.dump() << "\n";
  else
    std::cout << render_term(out) << "\n";
  return kYes;
}

int cmd_inner_check(const Config& c, const std::vector<std::string>& image_text) {
  std::vector<Term> images;
  for (const auto& s : image_text) images.push_back(parse(c, s, c.gens));
  std::optional<IsoElem> w;
  if (c.th() == Theory::Quandle) {
    if (auto q = quandle_inner_witness(images, c.gens)) w = *q;
  } else if (auto r = rack_inner_witness(images, c.gens)) {
    w = *r;
  }
  if (!w) return verdict(c, false, "", "not-inner");
  print_elem(c, *w);
  return kYes;
}

struct VerifyArgs {
  std::string suite;
  std::optional<std::size_t> max_size, samples, max_len, steps;
  std::optional<long> max_z;
  std::optional<std::uint32_t> gens;
};

int cmd_verify(const Config& c, const VerifyArgs& v, bool gens_given) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), v.suite) == names.end()) {
    std::cerr << "unknown suite '" << v.suite << "'; expected one of:";
    for (const auto& n : names) std::cerr << " " << n;
    std::cerr << "\n";
    return kInputError;
  }
  VerifyOptions o = suite_defaults(v.suite, c.th());
  o.seed = c.seed;
  if (gens_given) o.gens = c.gens;
  if (v.max_size) o.max_size = *v.max_size;
  if (v.samples) o.samples = *v.samples;
  if (v.max_len) o.max_len = *v.max_len;
  if (v.steps) o.steps = *v.steps;
  if (v.max_z) o.max_z = *v.max_z;
  const SuiteReport rep = *run_suite(v.suite, o);
  if (c.json) {
    std::cout << json{{"suite", rep.name},
                      {"pass", rep.ok()},
                      {"checks", rep.checks},
                      {"failed", rep.failed},
                      {"notes", rep.notes},
                      {"failures", rep.failures}}
                     .dump()
              << "\n";
  } else {
    std::cout << rep.text();
  }
  return rep.ok() ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word problem and isotropy groups of free racks and quandles"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--theory", cfg.theory, "quandle or rack")
      ->check(CLI::IsMember({"quandle", "rack"}))
      ->capture_default_str();
  auto* gens_opt = app.add_option("--gens", cfg.gens, "number of generators y1..yn")
                       ->capture_default_str();
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--seed", cfg.seed, "seed for sampled sweeps")->capture_default_str();
  app.add_flag("--no-aux", cfg.no_aux, "reject x0 and x1 in input terms");

  std::function<int()> run;

  std::string t1, t2;
  bool from_stdin = false;
  auto* eq = app.add_subcommand("eq", "decide equality of two terms");
  eq->add_option("t1", t1);
  eq->add_option("t2", t2);
  eq->add_flag("--stdin", from_stdin, "read 't1 ; t2' pairs, one per line");
  eq->callback([&] {
    run = [&] {
      if (from_stdin) return cmd_eq_stdin(cfg);
      if (eq->count("t1") == 0 || eq->count("t2") == 0)
        throw SyntaxError(0, "eq needs two terms (or --stdin)");
      return cmd_eq(cfg, t1, t2);
    };
  });

  auto* nf = app.add_subcommand("nf", "print the free-group normal form of a term");
  nf->add_option("term", t1)->required();
  nf->callback([&] { run = [&] { return cmd_nf(cfg, t1); }; });

  auto* canon = app.add_subcommand("canon", "canonical isotropy element of a term, if any");
  canon->add_option("term", t1)->required();
  canon->callback([&] { run = [&] { return cmd_canon(cfg, t1); }; });

  std::vector<std::string> elems;
  auto* mul = app.add_subcommand("mul", "multiply isotropy elements left to right");
  mul->add_option("elems", elems)->required();
  mul->callback([&] { run = [&] { return cmd_mul(cfg, elems); }; });

  auto* inv = app.add_subcommand("inv", "inverse of an isotropy element");
  inv->add_option("elem", t1)->required();
  inv->callback([&] { run = [&] { return cmd_inv(cfg, t1); }; });

  std::vector<std::string> images;
  auto* apply = app.add_subcommand("apply", "apply an isotropy element to q under images");
  apply->add_option("elem", t1)->required();
  apply->add_option("q", t2)->required();
  apply->add_option("--image", images, "image term of y_i, repeated in order")
      ->allow_extra_args(false);
  apply->callback([&] { run = [&] { return cmd_apply(cfg, t1, t2, images); }; });

  auto* inner = app.add_subcommand("inner-check", "decide whether generator images are inner");
  inner->add_option("images", images);
  inner->callback([&] { run = [&] { return cmd_inner_check(cfg, images); }; });

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("suite", va.suite)->required();
  verify->add_option("--max-size", va.max_size, "term size bound");
  verify->add_option("--samples", va.samples, "random samples");
  verify->add_option("--max-len", va.max_len, "word length bound");
  verify->add_option("--steps", va.steps, "rewrite steps");
  verify->add_option("--max-z", va.max_z, "bound on |z|");
  verify->callback([&] { run = [&] { return cmd_verify(cfg, va, gens_opt->count() > 0); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  try {
    return run();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
