#include "kronecker.hpp"

#include <algorithm>
#include <cstring>

namespace twistpoly::detail {

namespace {

constexpr std::size_t kMaxLimbs = std::size_t(1) << 23;

struct Layout {
  Exponents bound;                  // exclusive per-variable exponent bound
  std::vector<std::uint64_t> weight;
  std::size_t nslots = 0;
  std::size_t limbs = 0;            // 64-bit limbs per slot
};

bool make_layout(const Exponents& bound, std::size_t bits, Layout& out) {
  out.bound = bound;
  out.weight.assign(bound.size(), 0);
  std::uint64_t w = 1;
  for (std::size_t i = bound.size(); i-- > 0;) {
    out.weight[i] = w;
    if (bound[i] && w > (std::uint64_t(1) << 40) / bound[i]) return false;
    w *= bound[i];
  }
  out.nslots = w;
  out.limbs = (bits + 63) / 64;
  return out.nslots * out.limbs <= kMaxLimbs;
}

std::size_t bit_length(const Integer& z) { return z == 0 ? 1 : mpz_sizeinbase(z.get_mpz_t(), 2); }

Integer pack(const Poly& p, const Layout& lay) {
  const std::size_t total = lay.nslots * lay.limbs;
  std::vector<mp_limb_t> pos(total, 0), neg;
  bool any_neg = false;
  for (const auto& t : p.terms()) any_neg |= t.c < 0;
  if (any_neg) neg.assign(total, 0);
  for (const auto& t : p.terms()) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < t.e.size(); ++i) idx += t.e[i] * lay.weight[i];
    const mpz_srcptr z = t.c.get_num_mpz_t();
    const std::size_t n = mpz_size(z);
    if (n > lay.limbs) throw ArithmeticError("kronecker slot overflow");
    auto& dst = mpz_sgn(z) > 0 ? pos : neg;
    std::memcpy(dst.data() + idx * lay.limbs, mpz_limbs_read(z), n * sizeof(mp_limb_t));
  }
  auto load = [total](const std::vector<mp_limb_t>& src) {
    Integer r;
    mp_limb_t* w = mpz_limbs_write(r.get_mpz_t(), total);
    std::memcpy(w, src.data(), total * sizeof(mp_limb_t));
    mpz_limbs_finish(r.get_mpz_t(), total);
    return r;
  };
  Integer r = load(pos);
  if (any_neg) r -= load(neg);
  return r;
}

// Balanced-digit decode. Returns false if the value does not fit the layout.
bool unpack(const Integer& value, const Layout& lay, const VarTablePtr& vars, Poly& out) {
  const int sign = sgn(value);
  const mpz_srcptr v = value.get_mpz_t();
  const std::size_t n = mpz_size(v);
  const mp_limb_t* src = mpz_limbs_read(v);
  const std::size_t bits = lay.limbs * 64;
  Integer half, full;
  mpz_setbit(half.get_mpz_t(), bits - 1);
  mpz_setbit(full.get_mpz_t(), bits);
  std::vector<Term> terms;
  Integer t;
  int carry = 0;
  for (std::size_t s = 0; s < lay.nslots; ++s) {
    const std::size_t base = s * lay.limbs;
    bool zero = true;
    for (std::size_t k = 0; k < lay.limbs && base + k < n; ++k)
      if (src[base + k]) {
        zero = false;
        break;
      }
    if (zero && !carry) continue;
    if (zero) {
      t = 0;
    } else {
      mp_limb_t* w = mpz_limbs_write(t.get_mpz_t(), lay.limbs);
      for (std::size_t k = 0; k < lay.limbs; ++k) w[k] = base + k < n ? src[base + k] : 0;
      mpz_limbs_finish(t.get_mpz_t(), lay.limbs);
    }
    if (carry) t += 1;
    if (t >= half) {
      t -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    if (t == 0) continue;
    Exponents e(lay.bound.size(), 0);
    std::uint64_t rem = s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!lay.weight[i] || lay.bound[i] <= 1) continue;
      e[i] = static_cast<std::uint32_t>(rem / lay.weight[i]);
      rem %= lay.weight[i];
    }
    terms.push_back({std::move(e), Rational(sign < 0 ? Integer(-t) : t)});
  }
  if (carry || n > lay.nslots * lay.limbs) return false;
  std::reverse(terms.begin(), terms.end());
  out = Poly::from_sorted(vars, std::move(terms));
  return true;
}

}  // namespace

bool kronecker_worthwhile(const Poly& a, const Poly& b) {
  const std::size_t work = a.size() * b.size();
  if (work < 400) return false;
  Exponents da = a.degrees(), db = b.degrees(), bound(da.size());
  double slots = 1;
  for (std::size_t i = 0; i < da.size(); ++i) {
    bound[i] = da[i] + db[i] + 1;
    slots *= bound[i];
  }
  return slots <= 16.0 * double(work) && slots < double(kMaxLimbs) / 4;
}

Poly kronecker_mul(const Poly& a, const Poly& b) {
  Exponents da = a.degrees(), db = b.degrees(), bound(da.size());
  for (std::size_t i = 0; i < da.size(); ++i) bound[i] = da[i] + db[i] + 1;
  std::size_t bits = bit_length(a.max_abs_numerator()) + bit_length(b.max_abs_numerator()) +
                     bit_length(Integer(std::min(a.size(), b.size()))) + 2;
  Layout lay;
  if (!make_layout(bound, bits, lay)) throw ArithmeticError("kronecker layout too large");
  Integer prod = pack(a, lay) * pack(b, lay);
  Poly out(a.vars());
  if (!unpack(prod, lay, a.vars(), out)) throw ArithmeticError("kronecker decode failed");
  return out;
}

DivOutcome kronecker_divexact(const Poly& a, const Poly& b, Poly& quotient) {
  if (a.size() < 24 || !a.integral() || !b.integral()) return DivOutcome::Unsupported;
  Exponents da = a.degrees(), bound(da.size());
  for (std::size_t i = 0; i < da.size(); ++i) bound[i] = da[i] + 1;
  std::size_t bits = std::max(bit_length(a.max_abs_numerator()), bit_length(b.max_abs_numerator())) + 64;
  for (int attempt = 0; attempt < 2; ++attempt, bits *= 2) {
    Layout lay;
    if (!make_layout(bound, bits, lay)) return DivOutcome::Unsupported;
    double density = double(lay.nslots) / double(a.size());
    if (density > 64) return DivOutcome::Unsupported;
    Integer pa = pack(a, lay), pb = pack(b, lay);
    if (!mpz_divisible_p(pa.get_mpz_t(), pb.get_mpz_t())) return DivOutcome::NotDivisible;
    Integer q;
    mpz_divexact(q.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
    Poly cand(a.vars());
    if (!unpack(q, lay, a.vars(), cand)) continue;
    if (kronecker_worthwhile(cand, b) ? kronecker_mul(cand, b) == a : cand * b == a) {
      quotient = std::move(cand);
      return DivOutcome::Quotient;
    }
  }
  return DivOutcome::Unsupported;
}

}  // namespace twistpoly::detail
