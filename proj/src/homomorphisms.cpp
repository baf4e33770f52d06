#include "tvb/homomorphisms.hpp"

#include <algorithm>

#include "tvb/conj.hpp"

namespace tvb {

namespace {

Alphabet alphabet_of(const std::string& family) {
  if (family == "tvpn") return Alphabet::PureTwisted;
  if (family == "tvhn") return Alphabet::HTwisted;
  if (family == "pln") return Alphabet::DecoratedPL;
  if (family == "hln") return Alphabet::DecoratedHL;
  return Alphabet::Ambient;
}

// Lookup key for a letter: sign dropped; pair atoms keep their decoration.
Atom key(const Atom& a) { return a.base(); }

}  // namespace

ConcreteHom::ConcreteHom(std::string name, std::string source_family, int n, TargetKind target)
    : name_(std::move(name)), source_(std::move(source_family)), n_(n), target_(target) {}

Alphabet ConcreteHom::source_alphabet() const { return alphabet_of(source_); }

void ConcreteHom::set_image(const Atom& generator, SignedPermutation image) {
  images_[key(generator)] = std::move(image);
}

SignedPermutation ConcreteHom::atom_image(const Atom& a) const {
  require_legal(a, n_, source_alphabet() == Alphabet::PureTwisted || source_alphabet() == Alphabet::HTwisted
                           ? Alphabet::Mixed
                           : source_alphabet());
  if (source_alphabet() == Alphabet::PureTwisted && a.kind == Kind::X)
    throw std::invalid_argument(name_ + ": letter " + format_atom(a) + " not in the source alphabet");
  if (source_alphabet() == Alphabet::HTwisted && a.kind == Kind::Lambda)
    throw std::invalid_argument(name_ + ": letter " + format_atom(a) + " not in the source alphabet");
  if (source_alphabet() != Alphabet::Ambient && (a.kind == Kind::Sigma || a.kind == Kind::Rho))
    throw std::invalid_argument(name_ + ": letter " + format_atom(a) + " not in the source alphabet");

  SignedPermutation img;
  if (auto it = images_.find(key(a)); it != images_.end()) {
    img = it->second;
  } else if (a.is_pair() && a.decorated()) {
    // a^{gamma_S} = gamma_S^{-1} a gamma_S
    Atom plain = a.base();
    plain.deco_i = plain.deco_j = false;
    auto it2 = images_.find(plain);
    if (it2 == images_.end()) throw std::invalid_argument(name_ + ": no image for " + format_atom(a));
    SignedPermutation g = identity();
    if (a.deco_i) g = compose(g, atom_image(Atom::gamma(a.i)));
    if (a.deco_j) g = compose(g, atom_image(Atom::gamma(a.j)));
    img = compose(compose(g.inverse(), it2->second), g);
  } else {
    throw std::invalid_argument(name_ + ": no image for " + format_atom(a));
  }
  return a.sign < 0 && !a.is_involution() ? img.inverse() : img;
}

SignedPermutation ConcreteHom::image(const Word& w) const {
  if (w.rank() != n_) throw RankMismatch(name_ + " is defined at n=" + std::to_string(n_));
  SignedPermutation acc = identity();
  for (const Atom& a : w) acc = compose(acc, atom_image(a));
  return acc;
}

std::string ConcreteHom::format(const SignedPermutation& e) const {
  return target_ == TargetKind::Symmetric ? e.perm().to_string() : e.to_string();
}

PresentationHom::PresentationHom(std::string name, std::string source_family, std::string target_family, int n)
    : name_(std::move(name)), source_(std::move(source_family)), target_(std::move(target_family)), n_(n) {}

void PresentationHom::set_image(const Atom& generator, Word image) { images_[key(generator)] = std::move(image); }

Word PresentationHom::image(const Word& w) const {
  if (w.rank() != n_) throw RankMismatch(name_ + " is defined at n=" + std::to_string(n_));
  Alphabet target_alpha = alphabet_of(target_);
  if (target_ == "vpn") target_alpha = Alphabet::PureTwisted;
  std::vector<Atom> out;
  for (const Atom& a : w) {
    require_legal(a, n_, alphabet_of(source_));
    auto it = images_.find(key(canonical(a)));
    if (it == images_.end()) throw std::invalid_argument(name_ + ": no image for " + format_atom(a));
    Word img = a.sign < 0 ? inverse_raw(it->second) : it->second;
    out.insert(out.end(), img.begin(), img.end());
  }
  return free_reduce(Word(n_, target_alpha, std::move(out)));
}

AffineHom::AffineHom(int n) : n_(n) {
  for (int i = 1; i < n; ++i) {
    std::vector<long long> t(static_cast<std::size_t>(n), 0);
    t[static_cast<std::size_t>(i - 1)] = 1;
    t[static_cast<std::size_t>(i)] = -1;
    SignedPermutation swap = SignedPermutation::transposition(n, i, i + 1);
    rho_.emplace_back(swap, std::vector<long long>(static_cast<std::size_t>(n), 0));
    sigma_.emplace_back(swap, t);
  }
  for (int j = 1; j <= n; ++j)
    gamma_.emplace_back(SignedPermutation::flip(n, j), std::vector<long long>(static_cast<std::size_t>(n), 0));
}

AffineSignedPermutation AffineHom::image(const Word& w) const {
  if (w.rank() != n_) throw RankMismatch("affP is defined at n=" + std::to_string(n_));
  AffineSignedPermutation acc = AffineSignedPermutation::identity(n_);
  for (const Atom& a : w) {
    require_legal(a, n_, Alphabet::Ambient);
    auto idx = static_cast<std::size_t>(a.i - 1);
    AffineSignedPermutation g = a.kind == Kind::Sigma ? sigma_[idx] : a.kind == Kind::Rho ? rho_[idx] : gamma_[idx];
    if (a.kind == Kind::Sigma && a.sign < 0) g = g.inverse();
    acc = compose(acc, g);
  }
  return acc;
}

const std::vector<std::string>& hom_names() {
  static const std::vector<std::string> names = {"phiP", "phiH", "phiPT", "phiHT", "psiP", "psiH", "plToVp"};
  return names;
}

ConcreteHom make_concrete_hom(const std::string& name, int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (name == "phiP" || name == "phiH" || name == "phiPT" || name == "phiHT") {
    bool signed_target = name == "phiPT" || name == "phiHT";
    bool sigma_moves = name == "phiP" || name == "phiPT";
    ConcreteHom h(name, "tvbn", n, signed_target ? TargetKind::Hyperoctahedral : TargetKind::Symmetric);
    for (int i = 1; i < n; ++i) {
      auto swap = SignedPermutation::transposition(n, i, i + 1);
      h.set_image(Atom::rho(i), swap);
      h.set_image(Atom::sigma(i), sigma_moves ? swap : SignedPermutation::identity(n));
    }
    for (int j = 1; j <= n; ++j)
      h.set_image(Atom::gamma(j), signed_target ? SignedPermutation::flip(n, j) : SignedPermutation::identity(n));
    return h;
  }
  if (name == "psiP" || name == "psiH") {
    Kind k = name == "psiP" ? Kind::Lambda : Kind::X;
    ConcreteHom h(name, name == "psiP" ? "tvpn" : "tvhn", n, TargetKind::ElementaryAbelian);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) h.set_image(Atom{k, i, j, false, false, 1}, SignedPermutation::identity(n));
    for (int j = 1; j <= n; ++j) h.set_image(Atom::gamma(j), SignedPermutation::flip(n, j));
    return h;
  }
  if (name == "plToVp") throw UnknownHomomorphism("plToVp has a presentation target");
  throw UnknownHomomorphism("unknown homomorphism '" + name + "'");
}

Homomorphism make_hom(const std::string& name, int n) {
  if (name != "plToVp") return make_concrete_hom(name, n);
  if (n < 2) throw std::invalid_argument("plToVp needs n >= 2");
  PresentationHom h("plToVp", "pln", "vpn", n);
  auto w = [n](std::vector<Atom> a) { return Word(n, Alphabet::PureTwisted, std::move(a)); };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      h.set_image(Atom::lambda(i, j), w({Atom::lambda(i, j)}));
      h.set_image(Atom::lambda(i, j, 1, true, false), w({}));
      h.set_image(Atom::lambda(i, j, 1, false, true), w({}));
      h.set_image(Atom::lambda(i, j, 1, true, true), w({Atom::lambda(j, i)}));
    }
  return h;
}

bool WellDefinedReport::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

std::vector<CheckLine> WellDefinedReport::failures() const {
  std::vector<CheckLine> out;
  std::copy_if(lines.begin(), lines.end(), std::back_inserter(out), [](const CheckLine& l) { return !l.pass; });
  return out;
}

std::string WellDefinedReport::format() const {
  std::string s;
  for (const CheckLine& l : lines) s += l.id + (l.pass ? " PASS " : " FAIL ") + l.detail + "\n";
  return s;
}

WellDefinedReport check_well_defined(const ConcreteHom& h, const std::vector<Relator>& relators) {
  WellDefinedReport rep{h.name(), h.rank(), {}};
  for (const Relator& r : relators) {
    SignedPermutation e = h.image(r.word);
    rep.lines.push_back({r.id, e.is_identity(), h.format(e)});
  }
  return rep;
}

WellDefinedReport check_well_defined(const ConcreteHom& h) {
  return check_well_defined(h, build_presentation(h.source_family(), h.rank()).relators);
}

WellDefinedReport check_well_defined(const PresentationHom& h, const std::vector<Relator>& relators) {
  Presentation target = build_presentation(h.target_family(), h.rank());
  std::map<RelatorKey, std::string> schema;
  for (const Relator& r : target.relators) schema.emplace(relator_key(r.word), r.id);
  WellDefinedReport rep{h.name(), h.rank(), {}};
  for (const Relator& r : relators) {
    Word img = h.image(r.word);
    RelatorKey k = relator_key(img);
    if (k.trivial()) {
      rep.lines.push_back({r.id, true, "trivial"});
    } else if (auto it = schema.find(k); it != schema.end()) {
      rep.lines.push_back({r.id, true, it->second});
    } else {
      rep.lines.push_back({r.id, false, format_word(img)});
    }
  }
  return rep;
}

WellDefinedReport check_well_defined(const PresentationHom& h) {
  return check_well_defined(h, build_presentation(h.source_family(), h.rank()).relators);
}

WellDefinedReport check_well_defined(const AffineHom& h) {
  WellDefinedReport rep{h.name(), h.rank(), {}};
  for (const Relator& r : build_presentation("tvbn", h.rank()).relators) {
    auto e = h.image(r.word);
    rep.lines.push_back({r.id, e.is_identity(), e.to_string()});
  }
  return rep;
}

WellDefinedReport check_well_defined(const Homomorphism& h) {
  return std::visit([](const auto& x) { return check_well_defined(x); }, h);
}

std::string image_string(const Homomorphism& h, const Word& w) {
  if (const auto* c = std::get_if<ConcreteHom>(&h)) return c->format(c->image(w));
  return format_word(std::get<PresentationHom>(h).image(w));
}

bool in_kernel(const Homomorphism& h, const Word& w) {
  if (const auto* c = std::get_if<ConcreteHom>(&h)) return c->in_kernel(w);
  throw KernelUndecidable(std::get<PresentationHom>(h).name() + " has a presentation target; kernel membership is not decided");
}

}  // namespace tvb
