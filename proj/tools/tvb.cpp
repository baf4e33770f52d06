// tvb: command-line front end.
//
//   tvb normalize -n 3 "g2 g2 s1"
//   tvb image --hom phiP -n 3 "s1"
//   tvb kernel --hom phiH -n 3 "s2"
//   tvb rewrite --into tvp -n 3 "s1 g3 s1^-1 g3"
//   tvb present --group tvpn -n 2 [--json]
//   tvb abelianize --group tvhn -n 4
//   tvb verify --all -n 2..4 [--seed 1729] [--json]
//
// Words come from the positional arguments, or from standard input one per
// line. Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
// 3 domain error (word outside the kernel, undecidable request).

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tvb/abelianize.hpp"
#include "tvb/homomorphisms.hpp"
#include "tvb/presentations.hpp"
#include "tvb/rs_engine.hpp"
#include "tvb/verify.hpp"
#include "tvb/word.hpp"

namespace {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> input_lines(const std::vector<std::string>& args) {
  if (!args.empty()) return args;
  std::vector<std::string> out;
  for (std::string line; std::getline(std::cin, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

std::vector<tvb::Word> parse_all(const std::vector<std::string>& texts, int n, tvb::Alphabet a) {
  std::vector<tvb::Word> out;
  for (const auto& t : texts) out.push_back(tvb::parse_word(t, n, a));
  return out;
}

tvb::Alphabet source_alphabet(const tvb::Homomorphism& h) {
  if (const auto* c = std::get_if<tvb::ConcreteHom>(&h)) return c->source_alphabet();
  return tvb::Alphabet::DecoratedPL;
}

void emit(const std::vector<std::string>& inputs, const std::vector<std::string>& outputs, bool json) {
  if (!json) {
    for (const auto& o : outputs) std::cout << o << "\n";
    return;
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < outputs.size(); ++k) j.push_back({{"input", inputs[k]}, {"output", outputs[k]}});
  std::cout << j.dump(2) << "\n";
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {v, v};
    }
    int lo = std::stoi(s.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(s);
    std::string rest = s.substr(dots + 2);
    int hi = std::stoi(rest, &used);
    if (used != rest.size() || hi < lo) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("-n", "expected <n> or <lo>..<hi>, got '" + s + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Words, homomorphisms and subgroup presentations of twisted virtual braid groups"};
  app.require_subcommand(1);

  int n = 0;
  std::string hom, group, into, ranks;
  bool json = false, all = false;
  std::uint64_t seed = tvb::kDefaultSeed;
  std::vector<std::string> words, checks;

  auto add_rank = [&](CLI::App* c) { c->add_option("-n", n, "rank")->required()->check(CLI::Range(1, 64)); };
  auto add_words = [&](CLI::App* c) { c->add_option("words", words, "words (default: standard input)"); };

  auto* normalize = app.add_subcommand("normalize", "free and involution cancellation");
  add_rank(normalize);
  add_words(normalize);
  normalize->add_flag("--json", json);

  auto* image = app.add_subcommand("image", "image of a word under a homomorphism");
  auto* kernel = app.add_subcommand("kernel", "kernel membership (concrete targets)");
  for (auto* c : {image, kernel}) {
    add_rank(c);
    c->add_option("--hom", hom, "phiP phiH phiPT phiHT psiP psiH plToVp")->required();
    add_words(c);
    c->add_flag("--json", json);
  }

  auto* rewrite = app.add_subcommand("rewrite", "Reidemeister-Schreier rewriting into a kernel");
  add_rank(rewrite);
  rewrite->add_option("--into", into, "tvp tvh pt ht pl hl")->required();
  add_words(rewrite);
  rewrite->add_flag("--json", json);

  auto* present = app.add_subcommand("present", "dump a presentation");
  auto* abelianize = app.add_subcommand("abelianize", "abelian invariants of a presentation");
  for (auto* c : {present, abelianize}) {
    add_rank(c);
    c->add_option("--group", group, "family name")->required();
    c->add_flag("--json", json);
  }

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("-n", ranks, "rank or range lo..hi")->required();
  verify->add_option("--check", checks, "check id (repeatable)");
  verify->add_flag("--all", all, "every check");
  verify->add_option("--seed", seed, "seed for random words");
  verify->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (normalize->parsed()) {
      auto in = input_lines(words);
      std::vector<std::string> out;
      for (const auto& w : parse_all(in, n, tvb::Alphabet::Mixed)) out.push_back(tvb::format_word(tvb::reduce(w)));
      emit(in, out, json);
    } else if (image->parsed() || kernel->parsed()) {
      tvb::Homomorphism h = tvb::make_hom(hom, n);
      auto in = input_lines(words);
      std::vector<std::string> out;
      for (const auto& w : parse_all(in, n, source_alphabet(h))) {
        if (image->parsed()) {
          out.push_back(tvb::image_string(h, w));
        } else {
          try {
            out.push_back(tvb::in_kernel(h, w) ? "true" : "false");
          } catch (const tvb::KernelUndecidable& e) {
            throw DomainError(e.what());
          }
        }
      }
      emit(in, out, json);
    } else if (rewrite->parsed()) {
      tvb::KernelKind k = tvb::parse_kernel_kind(into);
      tvb::RSContext ctx = tvb::make_context(k, n);
      auto in = input_lines(words);
      std::vector<std::string> out;
      for (const auto& w : parse_all(in, n, ctx.ambient.alphabet)) {
        try {
          out.push_back(tvb::format_word(tvb::rewrite_tau(ctx, w)));
        } catch (const tvb::NotInKernel& e) {
          throw DomainError(e.what());
        }
      }
      emit(in, out, json);
    } else if (present->parsed()) {
      tvb::Presentation p = tvb::build_presentation(group, n);
      std::cout << (json ? tvb::presentation_json(p) : tvb::format_presentation(p));
    } else if (abelianize->parsed()) {
      tvb::AbelianInvariants inv = tvb::abelian_invariants(tvb::build_presentation(group, n));
      if (json) {
        nlohmann::ordered_json j;
        j["group"] = group;
        j["n"] = n;
        j["free_rank"] = inv.free_rank;
        j["torsion"] = nlohmann::ordered_json::array();
        for (const auto& d : inv.torsion) j["torsion"].push_back(d.str());
        j["text"] = inv.format();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << inv.format() << "\n";
      }
    } else if (verify->parsed()) {
      auto [lo, hi] = parse_range(ranks);
      if (all) checks = tvb::check_ids();
      if (checks.empty()) throw CLI::ValidationError("verify", "give --all or at least one --check");
      auto reports = tvb::run_suite(checks, lo, hi, seed);
      std::cout << (json ? tvb::report_json(reports, seed) : tvb::format_report(reports, seed));
      return tvb::all_passed(reports) ? 0 : 1;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tvb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
