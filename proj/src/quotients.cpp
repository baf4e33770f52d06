#include "tvb/quotients.hpp"

#include <algorithm>
#include <sstream>

namespace tvb {

namespace {

void require_same_degree(int a, int b) {
  if (a != b) throw std::invalid_argument("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > degree() || hit[static_cast<std::size_t>(v)])
      throw std::invalid_argument("image array is not a bijection");
    hit[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) im[static_cast<std::size_t>(k)] = k + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto im = identity(n).images_;
  std::swap(im[static_cast<std::size_t>(a - 1)], im[static_cast<std::size_t>(b - 1)]);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int k = 0; k < degree(); ++k)
    if (images_[static_cast<std::size_t>(k)] != k + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int k = 1; k <= degree(); ++k) inv[static_cast<std::size_t>((*this)(k) - 1)] = k;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(images_[k]);
  }
  return s + "]";
}

Permutation compose(const Permutation& a, const Permutation& b) {
  require_same_degree(a.degree(), b.degree());
  std::vector<int> im(static_cast<std::size_t>(a.degree()));
  for (int x = 1; x <= a.degree(); ++x) im[static_cast<std::size_t>(x - 1)] = b(a(x));
  return Permutation(std::move(im));
}

SignedPermutation::SignedPermutation(Permutation perm, std::vector<std::uint8_t> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  require_same_degree(perm_.degree(), static_cast<int>(signs_.size()));
  for (auto s : signs_)
    if (s > 1) throw std::invalid_argument("sign entries must be 0 or 1");
}

SignedPermutation::SignedPermutation(Permutation perm)
    : perm_(std::move(perm)), signs_(static_cast<std::size_t>(perm_.degree()), 0) {}

SignedPermutation SignedPermutation::identity(int n) { return SignedPermutation(Permutation::identity(n)); }

SignedPermutation SignedPermutation::flip(int n, int point) {
  std::vector<std::uint8_t> s(static_cast<std::size_t>(n), 0);
  s[static_cast<std::size_t>(point - 1)] = 1;
  return {Permutation::identity(n), std::move(s)};
}

SignedPermutation SignedPermutation::transposition(int n, int a, int b) {
  return SignedPermutation(Permutation::transposition(n, a, b));
}

bool SignedPermutation::is_identity() const { return perm_.is_identity() && unsigned_part_only(); }

bool SignedPermutation::unsigned_part_only() const {
  return std::all_of(signs_.begin(), signs_.end(), [](auto s) { return s == 0; });
}

int SignedPermutation::signed_image(int x) const {
  int ax = x < 0 ? -x : x;
  int img = perm_(ax);
  bool neg = (signs_[static_cast<std::size_t>(ax - 1)] != 0) != (x < 0);
  return neg ? -img : img;
}

SignedPermutation SignedPermutation::inverse() const {
  int n = degree();
  std::vector<int> im(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> s(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    int y = perm_(x);
    im[static_cast<std::size_t>(y - 1)] = x;
    s[static_cast<std::size_t>(y - 1)] = signs_[static_cast<std::size_t>(x - 1)];
  }
  return {Permutation(std::move(im)), std::move(s)};
}

std::string SignedPermutation::to_string() const {
  std::string s = perm_.to_string();
  s.pop_back();
  s += '|';
  for (std::size_t k = 0; k < signs_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(static_cast<int>(signs_[k]));
  }
  return s + "]";
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  require_same_degree(a.degree(), b.degree());
  int n = a.degree();
  std::vector<int> im(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> s(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    int y = a.perm()(x);
    im[static_cast<std::size_t>(x - 1)] = b.perm()(y);
    s[static_cast<std::size_t>(x - 1)] = a.signs()[static_cast<std::size_t>(x - 1)] ^ b.signs()[static_cast<std::size_t>(y - 1)];
  }
  return {Permutation(std::move(im)), std::move(s)};
}

AffineSignedPermutation::AffineSignedPermutation(SignedPermutation linear, std::vector<long long> shift)
    : linear_(std::move(linear)), shift_(std::move(shift)) {
  require_same_degree(linear_.degree(), static_cast<int>(shift_.size()));
}

AffineSignedPermutation AffineSignedPermutation::identity(int n) {
  return {SignedPermutation::identity(n), std::vector<long long>(static_cast<std::size_t>(n), 0)};
}

AffineSignedPermutation AffineSignedPermutation::translation(std::vector<long long> shift) {
  int n = static_cast<int>(shift.size());
  return {SignedPermutation::identity(n), std::move(shift)};
}

bool AffineSignedPermutation::is_identity() const {
  return linear_.is_identity() && std::all_of(shift_.begin(), shift_.end(), [](long long v) { return v == 0; });
}

std::vector<long long> AffineSignedPermutation::apply_linear(const std::vector<long long>& v) const {
  std::vector<long long> out(v.size(), 0);
  for (int x = 1; x <= linear_.degree(); ++x) {
    int y = linear_.signed_image(x);
    long long c = v[static_cast<std::size_t>(x - 1)];
    if (y < 0) out[static_cast<std::size_t>(-y - 1)] -= c;
    else out[static_cast<std::size_t>(y - 1)] += c;
  }
  return out;
}

AffineSignedPermutation AffineSignedPermutation::inverse() const {
  AffineSignedPermutation inv_lin{linear_.inverse(), std::vector<long long>(shift_.size(), 0)};
  auto t = inv_lin.apply_linear(shift_);
  for (auto& c : t) c = -c;
  return {linear_.inverse(), std::move(t)};
}

std::string AffineSignedPermutation::to_string() const {
  std::string s = linear_.to_string() + "+(";
  for (std::size_t k = 0; k < shift_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(shift_[k]);
  }
  return s + ")";
}

AffineSignedPermutation compose(const AffineSignedPermutation& a, const AffineSignedPermutation& b) {
  auto t = b.apply_linear(a.shift());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] += b.shift()[k];
  return {compose(a.linear(), b.linear()), std::move(t)};
}

Permutation parse_permutation(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("permutation must look like [2,1,3]");
  return Permutation(parse_int_list(text.substr(1, text.size() - 2)));
}

SignedPermutation parse_signed_permutation(const std::string& text) {
  auto bar = text.find('|');
  if (text.size() < 2 || text.front() != '[' || text.back() != ']' || bar == std::string::npos)
    throw std::invalid_argument("signed permutation must look like [2,1,3|0,1,0]");
  auto perm = parse_int_list(text.substr(1, bar - 1));
  auto signs = parse_int_list(text.substr(bar + 1, text.size() - bar - 2));
  std::vector<std::uint8_t> s;
  for (int v : signs) {
    if (v != 0 && v != 1) throw std::invalid_argument("sign entries must be 0 or 1");
    s.push_back(static_cast<std::uint8_t>(v));
  }
  return {Permutation(std::move(perm)), std::move(s)};
}

}  // namespace tvb
