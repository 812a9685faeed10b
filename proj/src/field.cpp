#include "gwt/field.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "gwt/fp_poly.hpp"

namespace gwt {

struct FieldData {
  FieldKind kind = FieldKind::rational;
  std::uint32_t p = 0;
  int degree = 1;
  fp::Poly modulus;  // monic, size degree+1; {0,1} for prime fields
  std::string spec;
  const FieldData* prime = nullptr;
  mutable std::once_flag nonsquare_once;
  mutable Elem nonsquare;
};

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint32_t, int>, std::unique_ptr<FieldData>>&
registry() {
  static std::map<std::pair<std::uint32_t, int>, std::unique_ptr<FieldData>> r;
  return r;
}

// First irreducible monic polynomial of degree e over F_p, scanning the
// coefficient tuples (c_{e-1}, ..., c_0) in ascending lexicographic order.
fp::Poly canonical_modulus(std::uint32_t p, int e) {
  std::vector<std::uint32_t> digits(e, 0);  // digits[0] = c_{e-1}
  while (true) {
    fp::Poly f(e + 1);
    f[e] = 1;
    for (int i = 0; i < e; ++i) f[e - 1 - i] = digits[i];
    if (f[0] != 0 && fp::is_irreducible(f, p)) return f;
    int pos = e - 1;
    while (pos >= 0 && ++digits[pos] == p) {
      digits[pos] = 0;
      --pos;
    }
    if (pos < 0) throw std::logic_error("no irreducible polynomial found");
  }
}

const FieldData* intern(std::uint32_t p, int e) {
  std::lock_guard lock(registry_mutex());
  auto& slot = registry()[{p, e}];
  if (!slot) {
    auto d = std::make_unique<FieldData>();
    d->kind = e == 1 ? FieldKind::prime : FieldKind::extension;
    d->p = p;
    d->degree = e;
    d->modulus = e == 1 ? fp::Poly{0, 1} : canonical_modulus(p, e);
    d->spec = e == 1 ? "gf(" + std::to_string(p) + ")"
                     : "gf(" + std::to_string(p) + "^" + std::to_string(e) + ")";
    slot = std::move(d);
  }
  return slot.get();
}

const FieldData* rational_data() {
  static const FieldData* d = [] {
    auto* q = new FieldData();
    q->kind = FieldKind::rational;
    q->spec = "rational";
    return q;
  }();
  return d;
}

void reduce_in_place(Elem::Residue& r, const FieldData* f) {
  if (f->degree == 1) {
    r.resize(1);
    return;
  }
  fp::Poly tmp(r.begin(), r.end());
  tmp = fp::rem_monic(std::move(tmp), f->modulus, f->p);
  r.assign(tmp.begin(), tmp.end());
  r.resize(f->degree, 0);
}

std::uint64_t parse_u64(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("expected a number");
  std::uint64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bad number: " + std::string(s));
    }
    if (v > (UINT64_MAX - 9) / 10) throw std::invalid_argument("number too large");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p == 2) throw std::invalid_argument("characteristic 2 unsupported");
  if (!is_prime(p)) throw std::invalid_argument("not prime: " + std::to_string(p));
  if (p >= (1ULL << 31)) throw std::invalid_argument("prime must be below 2^31");
  return Field(intern(static_cast<std::uint32_t>(p), 1));
}

Field Field::extension(const Field& base, int degree) {
  if (!base.valid() || base.kind() != FieldKind::prime) {
    throw std::invalid_argument("extension base must be a prime finite field");
  }
  if (degree < 2) throw std::invalid_argument("extension degree must be >= 2");
  return Field(intern(base.characteristic(), degree));
}

Field Field::rationals() { return Field(rational_data()); }

Field Field::parse(std::string_view spec) {
  if (spec == "rational") return rationals();
  if (spec.size() < 5 || spec.substr(0, 3) != "gf(" || spec.back() != ')') {
    throw std::invalid_argument("bad field spec: " + std::string(spec));
  }
  const auto body = spec.substr(3, spec.size() - 4);
  const auto caret = body.find('^');
  if (caret == std::string_view::npos) return prime(parse_u64(body));
  const Field base = prime(parse_u64(body.substr(0, caret)));
  const auto e = parse_u64(body.substr(caret + 1));
  if (e == 1) return base;
  if (e > 4096) throw std::invalid_argument("extension degree too large");
  return extension(base, static_cast<int>(e));
}

FieldKind Field::kind() const { return data_->kind; }
std::uint32_t Field::characteristic() const { return data_->p; }
int Field::degree() const { return data_->degree; }

mpz_class Field::order() const {
  if (!is_finite()) throw std::domain_error("Q has no finite order");
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), data_->p, static_cast<unsigned long>(data_->degree));
  return q;
}

Field Field::prime_field() const {
  if (!is_finite()) return *this;
  return Field(intern(data_->p, 1));
}

std::span<const std::uint32_t> Field::modulus() const { return data_->modulus; }
std::string Field::to_string() const { return data_->spec; }

Elem Field::zero() const { return from_int(0); }
Elem Field::one() const { return from_int(1); }

Elem Field::from_int(long v) const { return from_mpz(mpz_class(v)); }

Elem Field::from_mpz(const mpz_class& v) const {
  Elem x;
  x.f_ = data_;
  if (data_->kind == FieldKind::rational) {
    x.q_ = v;
  } else {
    mpz_class m = v % data_->p;
    if (m < 0) m += data_->p;
    x.r_.assign(static_cast<std::size_t>(data_->degree), 0);
    x.r_[0] = static_cast<std::uint32_t>(m.get_ui());
  }
  return x;
}

Elem Field::from_mpq(const mpq_class& v) const {
  if (data_->kind == FieldKind::rational) {
    Elem x;
    x.f_ = data_;
    x.q_ = v;
    x.q_.canonicalize();
    return x;
  }
  return from_mpz(v.get_num()) / from_mpz(v.get_den());
}

Elem Field::from_residue(std::vector<std::uint32_t> coeffs) const {
  if (!is_finite()) throw std::domain_error("residues need a finite field");
  Elem x;
  x.f_ = data_;
  for (auto& c : coeffs) c %= data_->p;
  x.r_.assign(coeffs.begin(), coeffs.end());
  reduce_in_place(x.r_, data_);
  return x;
}

Elem Field::generator() const {
  if (!is_finite()) throw std::domain_error("Q has no generator");
  if (data_->degree == 1) return one();
  return from_residue({0, 1});
}

Elem Field::element(const mpz_class& index) const {
  if (!is_finite()) throw std::domain_error("cannot enumerate Q");
  std::vector<std::uint32_t> digits;
  mpz_class m = index;
  for (int i = 0; i < data_->degree; ++i) {
    digits.push_back(static_cast<std::uint32_t>(mpz_class(m % data_->p).get_ui()));
    m /= data_->p;
  }
  return from_residue(std::move(digits));
}

const Elem& Field::nonsquare() const {
  if (!is_finite()) throw std::domain_error("Q has no canonical non-square");
  std::call_once(data_->nonsquare_once, [this] {
    for (mpz_class i = 2;; ++i) {
      Elem x = element(i);
      if (!is_square(x)) {
        data_->nonsquare = x;
        return;
      }
    }
  });
  return data_->nonsquare;
}

Elem Field::parse_element(std::string_view text) const {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty element");
  if (data_->kind == FieldKind::rational) {
    try {
      mpq_class q(s, 10);
      if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
      q.canonicalize();
      return from_mpq(q);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad rational: " + s);
    }
  }
  // Sum of terms c, c*a^k, a^k, -a, ...
  Elem total = zero();
  std::size_t i = 0;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    Elem term = one();
    bool any = false;
    if (j > i) {
      term = from_mpz(mpz_class(s.substr(i, j - i)));
      any = true;
      i = j;
      if (i < s.size() && s[i] == '*') ++i;
    }
    if (i < s.size() && s[i] == 'a') {
      if (data_->degree == 1) throw std::invalid_argument("prime field has no 'a'");
      ++i;
      long k = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t e = i;
        while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
        k = static_cast<long>(parse_u64(std::string_view(s).substr(i, e - i)));
        i = e;
      }
      term *= generator().pow(k);
      any = true;
    }
    if (!any || (i < s.size() && s[i] != '+' && s[i] != '-')) {
      throw std::invalid_argument("bad field element: " + s);
    }
    total += neg ? -term : term;
  }
  return total;
}

// ---------------------------------------------------------------------------

Field Elem::field() const { return Field(f_); }

void Elem::require_same(const Elem& o) const {
  if (f_ != o.f_ || f_ == nullptr) {
    throw std::invalid_argument("field element descriptor mismatch");
  }
}

bool Elem::is_zero() const {
  if (f_->kind == FieldKind::rational) return q_ == 0;
  for (auto c : r_) {
    if (c != 0) return false;
  }
  return true;
}

bool Elem::is_one() const {
  if (f_->kind == FieldKind::rational) return q_ == 1;
  if (r_[0] != 1) return false;
  for (std::size_t i = 1; i < r_.size(); ++i) {
    if (r_[i] != 0) return false;
  }
  return true;
}

Elem Elem::operator-() const {
  Elem x = *this;
  if (f_->kind == FieldKind::rational) {
    x.q_ = -q_;
  } else {
    for (auto& c : x.r_) c = c == 0 ? 0 : f_->p - c;
  }
  return x;
}

Elem& Elem::operator+=(const Elem& o) {
  require_same(o);
  if (f_->kind == FieldKind::rational) {
    q_ += o.q_;
  } else {
    const std::uint32_t p = f_->p;
    for (std::size_t i = 0; i < r_.size(); ++i) {
      std::uint32_t v = r_[i] + o.r_[i];
      if (v >= p) v -= p;
      r_[i] = v;
    }
  }
  return *this;
}

Elem& Elem::operator-=(const Elem& o) {
  require_same(o);
  if (f_->kind == FieldKind::rational) {
    q_ -= o.q_;
  } else {
    const std::uint32_t p = f_->p;
    for (std::size_t i = 0; i < r_.size(); ++i) {
      r_[i] = r_[i] >= o.r_[i] ? r_[i] - o.r_[i] : r_[i] + (p - o.r_[i]);
    }
  }
  return *this;
}

Elem& Elem::operator*=(const Elem& o) {
  require_same(o);
  if (f_->kind == FieldKind::rational) {
    q_ *= o.q_;
  } else if (f_->degree == 1) {
    r_[0] = static_cast<std::uint32_t>(std::uint64_t{r_[0]} * o.r_[0] % f_->p);
  } else {
    fp::Poly a(r_.begin(), r_.end()), b(o.r_.begin(), o.r_.end());
    fp::trim(a);
    fp::trim(b);
    fp::Poly prod = fp::rem_monic(fp::mul(a, b, f_->p), f_->modulus, f_->p);
    r_.assign(prod.begin(), prod.end());
    r_.resize(f_->degree, 0);
  }
  return *this;
}

Elem Elem::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Elem x = *this;
  if (f_->kind == FieldKind::rational) {
    x.q_ = 1 / q_;
  } else if (f_->degree == 1) {
    x.r_[0] = fp::inv_mod(r_[0], f_->p);
  } else {
    fp::Poly a(r_.begin(), r_.end());
    fp::trim(a);
    fp::Poly v = fp::inverse_mod(a, f_->modulus, f_->p);
    x.r_.assign(v.begin(), v.end());
    x.r_.resize(f_->degree, 0);
  }
  return x;
}

Elem& Elem::operator/=(const Elem& o) {
  require_same(o);
  return *this *= o.inv();
}

Elem Elem::pow(const mpz_class& e) const {
  if (e < 0) return inv().pow(-e);
  if (f_->kind == FieldKind::rational) {
    if (!e.fits_ulong_p()) throw std::domain_error("exponent too large over Q");
    Elem x = *this;
    mpz_pow_ui(mpq_numref(x.q_.get_mpq_t()), q_.get_num().get_mpz_t(), e.get_ui());
    mpz_pow_ui(mpq_denref(x.q_.get_mpq_t()), q_.get_den().get_mpz_t(), e.get_ui());
    x.q_.canonicalize();
    return x;
  }
  if (f_->degree == 1) {
    mpz_class r;
    mpz_class base = r_[0];
    mpz_class mod = f_->p;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    Elem x = *this;
    x.r_[0] = static_cast<std::uint32_t>(r.get_ui());
    return x;
  }
  fp::Poly a(r_.begin(), r_.end());
  fp::trim(a);
  fp::Poly v = fp::powmod(a, e, f_->modulus, f_->p);
  Elem x = *this;
  x.r_.assign(v.begin(), v.end());
  x.r_.resize(f_->degree, 0);
  return x;
}

bool operator==(const Elem& a, const Elem& b) {
  if (a.f_ != b.f_) return false;
  if (a.f_ == nullptr) return true;
  if (a.f_->kind == FieldKind::rational) return a.q_ == b.q_;
  return a.r_ == b.r_;
}

std::strong_ordering compare(const Elem& a, const Elem& b) {
  a.require_same(b);
  if (a.f_->kind == FieldKind::rational) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  for (std::size_t i = a.r_.size(); i-- > 0;) {
    if (a.r_[i] != b.r_[i]) {
      return a.r_[i] < b.r_[i] ? std::strong_ordering::less
                               : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::string Elem::to_string() const {
  if (f_->kind == FieldKind::rational) return q_.get_str();
  if (f_->degree == 1) return std::to_string(r_[0]);
  std::string out;
  for (std::size_t i = r_.size(); i-- > 0;) {
    const auto c = r_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

namespace {
void require_finite(const Elem& x, const char* what) {
  if (!x.field().is_finite()) {
    throw std::domain_error(std::string(what) + " needs a finite field");
  }
}
}  // namespace

Elem frobenius(const Elem& x) {
  require_finite(x, "frobenius");
  if (x.field().degree() == 1) return x;
  return x.pow(mpz_class(x.field().characteristic()));
}

Elem to_prime_field(const Elem& x) {
  require_finite(x, "to_prime_field");
  const auto r = x.residue();
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (r[i] != 0) throw std::domain_error("element is not in the prime field");
  }
  return x.field().prime_field().from_int(r[0]);
}

Elem lift(const Elem& x, const Field& target) {
  if (x.field() == target) return x;
  if (!x.field().is_finite()) throw std::domain_error("cannot lift rationals");
  if (x.field().degree() != 1 || target.characteristic() != x.field().characteristic()) {
    throw std::domain_error("lift needs a prime-field element of the same characteristic");
  }
  return target.from_int(x.residue()[0]);
}

Elem trace_to_base(const Elem& x) {
  require_finite(x, "trace");
  Elem acc = x;
  Elem conj = x;
  for (int i = 1; i < x.field().degree(); ++i) {
    conj = frobenius(conj);
    acc += conj;
  }
  return to_prime_field(acc);
}

Elem norm_to_base(const Elem& x) {
  require_finite(x, "norm");
  Elem acc = x;
  Elem conj = x;
  for (int i = 1; i < x.field().degree(); ++i) {
    conj = frobenius(conj);
    acc *= conj;
  }
  return to_prime_field(acc);
}

int element_degree(const Elem& x) {
  require_finite(x, "element_degree");
  Elem y = x;
  for (int j = 1;; ++j) {
    y = frobenius(y);
    if (y == x) return j;
  }
}

SquareClass square_class(const Elem& x) {
  if (x.is_zero()) throw std::domain_error("square class of zero");
  SquareClass c;
  if (x.field().is_finite()) {
    const mpz_class e = (x.field().order() - 1) / 2;
    c.sign = x.pow(e).is_one() ? 1 : -1;
    return c;
  }
  const mpq_class& q = x.rational();
  c.squarefree = squarefree_part(q.get_num() * q.get_den());
  c.sign = sgn(c.squarefree);
  return c;
}

bool is_square(const Elem& x) {
  if (x.field().is_finite()) return square_class(x).sign == 1;
  return square_class(x).squarefree == 1;
}

Elem square_class_representative(const Elem& x) {
  const SquareClass c = square_class(x);
  if (x.field().is_finite()) {
    return c.sign == 1 ? x.field().one() : x.field().nonsquare();
  }
  return x.field().from_mpz(c.squarefree);
}

}  // namespace gwt
