#include "tvb/published_tables.hpp"

#include <sstream>

namespace tvb {

const std::vector<Schema>& pl_commutation_schemas() {
  static const std::vector<Schema> s = {
      {"pl-comm:1", "ij:0 kl:0 = kl:0 ij:0"},      {"pl-comm:2", "ij:i kl:0 = kl:0 ij:i"},
      {"pl-comm:3", "ij:j kl:0 = kl:0 ij:j"},      {"pl-comm:4", "ij:0 kl:k = kl:k ij:0"},
      {"pl-comm:5", "ij:0 kl:l = kl:l ij:0"},      {"pl-comm:6", "ij:ij kl:0 = kl:0 ij:ij"},
      {"pl-comm:7", "ij:0 kl:kl = kl:kl ij:0"},    {"pl-comm:8", "ij:i kl:k = kl:k ij:i"},
      {"pl-comm:9", "ij:i kl:l = kl:l ij:i"},      {"pl-comm:10", "ij:j kl:k = kl:k ij:j"},
      {"pl-comm:11", "ij:j kl:l = kl:l ij:j"},     {"pl-comm:12", "ij:ij kl:k = kl:k ij:ij"},
      {"pl-comm:13", "ij:ij kl:l = kl:l ij:ij"},   {"pl-comm:14", "ij:i kl:kl = kl:kl ij:i"},
      {"pl-comm:15", "ij:j kl:kl = kl:kl ij:j"},   {"pl-comm:16", "ij:ij kl:kl = kl:kl ij:ij"},
  };
  return s;
}

const std::vector<Schema>& pl_triple_schemas() {
  static const std::vector<Schema> s = {
      {"pl-triple:1", "ij:0 ik:0 jk:0 = jk:0 ik:0 ij:0"},
      {"pl-triple:2", "ij:i ik:i jk:0 = jk:0 ik:i ij:i"},
      {"pl-triple:3", "ij:j ik:0 jk:j = jk:j ik:0 ij:j"},
      {"pl-triple:4", "ij:0 ik:k jk:k = jk:k ik:k ij:0"},
      {"pl-triple:5", "ij:ij ik:i jk:j = jk:j ik:i ij:ij"},
      {"pl-triple:6", "ij:j ik:k jk:jk = jk:jk ik:k ij:j"},
      {"pl-triple:7", "ij:i ik:ik jk:k = jk:k ik:ik ij:i"},
      {"pl-triple:8", "ij:ij ik:ik jk:jk = jk:jk ik:ik ij:ij"},
      {"pl-triple:9", "ij:ij jk:0 ik:0 = ik:0 jk:0 ij:ij"},
      {"pl-triple:10", "ij:j jk:0 ik:i = ik:i jk:0 ij:j"},
      {"pl-triple:11", "ij:i jk:j ik:0 = ik:0 jk:j ij:i"},
      {"pl-triple:12", "ij:0 jk:j ik:i = ik:i jk:j ij:0"},
      {"pl-triple:13", "ij:ij jk:k ik:k = ik:k jk:k ij:ij"},
      {"pl-triple:14", "ij:i jk:jk ik:k = ik:k jk:jk ij:i"},
      {"pl-triple:15", "ij:j jk:k ik:ik = ik:ik jk:k ij:j"},
      {"pl-triple:16", "ij:0 jk:jk ik:ik = ik:ik jk:jk ij:0"},
      {"pl-triple:17", "ik:0 ij:0 jk:jk = jk:jk ij:0 ik:0"},
      {"pl-triple:18", "ik:i ij:i jk:jk = jk:jk ij:i ik:i"},
      {"pl-triple:19", "ik:0 ij:j jk:k = jk:k ij:j ik:0"},
      {"pl-triple:20", "ik:k ij:0 jk:j = jk:j ij:0 ik:k"},
      {"pl-triple:21", "ik:i ij:ij jk:k = jk:k ij:ij ik:i"},
      {"pl-triple:22", "ik:k ij:j jk:jk = jk:jk ij:j ik:j"},
      {"pl-triple:23", "ik:ik ij:i jk:j = jk:j ij:i ik:ik"},
      {"pl-triple:24", "ik:ik ij:ij jk:0 = jk:0 ij:ij ik:ik"},
  };
  return s;
}

namespace {

int letter_index(char c, const std::vector<int>& indices) {
  int k = c - 'i';
  if (k < 0 || k >= static_cast<int>(indices.size())) throw std::invalid_argument(std::string("bad index letter ") + c);
  return indices[static_cast<std::size_t>(k)];
}

Atom schema_atom(const std::string& tok, const std::vector<int>& indices) {
  auto colon = tok.find(':');
  if (colon != 2) throw std::invalid_argument("bad schema token " + tok);
  std::string deco = tok.substr(3);
  Atom a = Atom::lambda(letter_index(tok[0], indices), letter_index(tok[1], indices));
  if (deco == "0") return a;
  for (char c : deco) {
    if (c == tok[0]) a.deco_i = true;
    else if (c == tok[1]) a.deco_j = true;
    else throw std::invalid_argument("decoration " + std::string(1, c) + " of " + tok + " is outside {" + tok[0] + "," + tok[1] + "}");
  }
  return a;
}

std::vector<Atom> side(std::istringstream& in, const std::vector<int>& indices, bool stop_at_eq) {
  std::vector<Atom> out;
  std::string tok;
  while (in >> tok) {
    if (tok == "=") {
      if (!stop_at_eq) throw std::invalid_argument("two '=' in schema");
      break;
    }
    out.push_back(schema_atom(tok, indices));
  }
  return out;
}

Word make_relator(int n, std::vector<Atom> lhs, std::vector<Atom> rhs) {
  Word l(n, Alphabet::Mixed, std::move(lhs));
  Word r(n, Alphabet::Mixed, std::move(rhs));
  Word w = free_reduce(concat(l, inverse_raw(r)));
  bool has_gamma = false;
  for (const Atom& a : w) has_gamma = has_gamma || a.kind == Kind::Gamma;
  return w.with_alphabet(has_gamma ? Alphabet::PureTwisted : Alphabet::DecoratedPL);
}

}  // namespace

Word instantiate_schema(const std::string& text, int n, const std::vector<int>& indices) {
  std::istringstream in(text);
  auto lhs = side(in, indices, true);
  auto rhs = side(in, indices, false);
  for (const Atom& a : lhs) require_legal(a, n, Alphabet::DecoratedPL);
  for (const Atom& a : rhs) require_legal(a, n, Alphabet::DecoratedPL);
  return make_relator(n, std::move(lhs), std::move(rhs));
}

TranscribedTable transcribed_pl_table(int n) {
  TranscribedTable out;
  auto try_schema = [&](const Schema& s, const std::vector<int>& probe) {
    try {
      (void)instantiate_schema(s.text, 4, probe);
      return true;
    } catch (const std::invalid_argument& e) {
      out.rejected.push_back({s.label, s.text, e.what()});
      return false;
    }
  };
  for (const Schema& s : pl_commutation_schemas()) {
    if (!try_schema(s, {1, 2, 3, 4})) continue;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            if (k == i || k == j || l == i || l == j) continue;
            out.relators.push_back({s.label + "@" + std::to_string(i) + "," + std::to_string(j) + ";" +
                                        std::to_string(k) + "," + std::to_string(l),
                                    instantiate_schema(s.text, n, {i, j, k, l})});
          }
  }
  for (const Schema& s : pl_triple_schemas()) {
    if (!try_schema(s, {1, 2, 3})) continue;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          out.relators.push_back({s.label + "@" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k),
                                  instantiate_schema(s.text, n, {i, j, k})});
  }
  return out;
}

std::vector<Relator> displayed_pl3_relators() {
  static const std::vector<std::pair<std::string, std::string>> rows = {
      {"pl3:1", "ij:0 ik:0 jk:0 = jk:0 ik:0 ij:0"},
      {"pl3:2", "ij:ij ik:ik jk:jk = jk:jk ik:ik ij:ij"},
      {"pl3:3", "ij:ij jk:0 ik:0 = ik:0 jk:0 ij:ij"},
      {"pl3:4", "ij:0 jk:jk ik:ik = ik:ik jk:jk ij:0"},
      {"pl3:5", "ik:0 ij:0 jk:jk = jk:jk ij:0 ik:0"},
      {"pl3:6", "ik:ik ij:ij jk:0 = jk:0 ij:ij ik:ik"},
  };
  std::vector<Relator> out;
  for (const auto& [id, text] : rows) out.push_back({id, instantiate_schema(text, 3, {1, 2, 3})});
  return out;
}

Presentation displayed_tvp3_presentation() {
  Presentation p;
  p.family = "tvp3-displayed";
  p.rank = 3;
  p.alphabet = Alphabet::PureTwisted;
  p.generators = {Atom::lambda(1, 2), Atom::lambda(1, 3), Atom::lambda(2, 3),
                  Atom::gamma(1),     Atom::gamma(2),     Atom::gamma(3)};
  // lambda_{ij}^{gamma_i gamma_j} is written ij:ij
  static const std::vector<std::pair<std::string, std::string>> rows = {
      {"tvp3:1", "ij:0 ik:0 jk:0 = jk:0 ik:0 ij:0"},
      {"tvp3:2", "ij:ij jk:0 ik:0 = ik:0 jk:0 ij:ij"},
      {"tvp3:3", "ik:0 ij:0 jk:jk = jk:jk ij:0 ik:0"},
      {"tvp3:4", "ik:ik jk:jk ij:0 = ij:0 jk:jk ik:ik"},
      {"tvp3:5", "jk:0 ij:ij ik:ik = ik:ik ij:ij jk:0"},
      {"tvp3:6", "jk:jk ik:ik ij:ij = ij:ij ik:ik jk:jk"},
  };
  for (const auto& [id, text] : rows) p.relators.push_back({id, instantiate_schema(text, 3, {1, 2, 3})});
  auto w = [](std::vector<Atom> a) { return Word(3, Alphabet::PureTwisted, std::move(a)); };
  auto comm = [&](const Atom& g, const Atom& l) { return w({g, l, g, l.inverse()}); };
  const Atom g1 = Atom::gamma(1), g2 = Atom::gamma(2), g3 = Atom::gamma(3);
  p.relators.push_back({"tvp3:g1,23", comm(g1, Atom::lambda(2, 3))});
  p.relators.push_back({"tvp3:g1,23:23", comm(g1, Atom::lambda(2, 3, 1, true, true))});
  p.relators.push_back({"tvp3:g2,13:13", comm(g2, Atom::lambda(1, 3, 1, true, true))});
  p.relators.push_back({"tvp3:g2,13", comm(g2, Atom::lambda(1, 3))});
  p.relators.push_back({"tvp3:g3,12", comm(g3, Atom::lambda(1, 2))});
  p.relators.push_back({"tvp3:g3,12:12", comm(g3, Atom::lambda(1, 2, 1, true, true))});
  for (int i = 1; i <= 3; ++i) p.relators.push_back({"A3:sq" + std::to_string(i), w({Atom::gamma(i), Atom::gamma(i)})});
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      p.relators.push_back({"A3:comm" + std::to_string(i) + "," + std::to_string(j),
                            w({Atom::gamma(i), Atom::gamma(j), Atom::gamma(i), Atom::gamma(j)})});
  return p;
}

}  // namespace tvb
