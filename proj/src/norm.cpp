#include "ptower/norm.hpp"

#include <cstdint>

namespace ptower {

namespace {

// ---------------------------------------------------------------------------
// Word policies: the unit digits of matrix entries live in u64 as long as
// p^r fits a machine word, otherwise in mpz. Both kernels are the same
// template; the wide one is the certified fallback.
// ---------------------------------------------------------------------------

struct U64Ops {
    using Word = std::uint64_t;
    unsigned long p;
    std::vector<Word> pw;

    U64Ops(unsigned long p_, unsigned rmax) : p(p_) {
        pw.reserve(rmax + 1);
        pw.push_back(1);
        for (unsigned i = 0; i < rmax; ++i) pw.push_back(pw.back() * p);
    }
    Word reduce(Word a, unsigned r) const { return a % pw[r]; }
    Word mulmod(Word a, Word b, unsigned r) const {
        return static_cast<Word>(static_cast<unsigned __int128>(a) * b % pw[r]);
    }
    Word addmod(Word a, Word b, unsigned r) const {
        Word s = a % pw[r] + b % pw[r];
        return s >= pw[r] ? s - pw[r] : s;
    }
    Word negmod(Word a, unsigned r) const {
        a %= pw[r];
        return a == 0 ? 0 : pw[r] - a;
    }
    Word shift_in(Word a, unsigned k, unsigned r) const {
        return k >= r ? 0 : mulmod(a, pw[k], r);
    }
    unsigned vord(Word a) const {
        unsigned v = 0;
        while (a % p == 0) {
            a /= p;
            ++v;
        }
        return v;
    }
    Word divp(Word a, unsigned k) const { return a / pw[k]; }
    Word inv(Word a, unsigned r) const {
        __int128 t0 = 0, t1 = 1;
        __int128 r0 = static_cast<__int128>(pw[r]), r1 = static_cast<__int128>(a % pw[r]);
        while (r1 != 0) {
            const __int128 q = r0 / r1;
            const __int128 r2 = r0 - q * r1;
            r0 = r1;
            r1 = r2;
            const __int128 t2 = t0 - q * t1;
            t0 = t1;
            t1 = t2;
        }
        t0 %= static_cast<__int128>(pw[r]);
        if (t0 < 0) t0 += static_cast<__int128>(pw[r]);
        return static_cast<Word>(t0);
    }
    Word from_mpz(const mpz_class& v, unsigned r) const {
        return mpz_fdiv_ui(v.get_mpz_t(), pw[r]);
    }
    mpz_class to_mpz(Word a) const { return mpz_class(static_cast<unsigned long>(a)); }
    bool is_zero(Word a) const { return a == 0; }
};

struct MpzOps {
    using Word = mpz_class;
    unsigned long p;
    std::vector<mpz_class> pw;

    MpzOps(unsigned long p_, unsigned rmax) : p(p_) {
        pw.reserve(rmax + 1);
        pw.push_back(1);
        for (unsigned i = 0; i < rmax; ++i) pw.push_back(pw.back() * static_cast<long>(p));
    }
    Word reduce(const Word& a, unsigned r) const {
        Word out;
        mpz_mod(out.get_mpz_t(), a.get_mpz_t(), pw[r].get_mpz_t());
        return out;
    }
    Word mulmod(const Word& a, const Word& b, unsigned r) const { return reduce(a * b, r); }
    Word addmod(const Word& a, const Word& b, unsigned r) const { return reduce(a + b, r); }
    Word negmod(const Word& a, unsigned r) const { return reduce(-a, r); }
    Word shift_in(const Word& a, unsigned k, unsigned r) const {
        return k >= r ? Word(0) : reduce(a * pw[k], r);
    }
    unsigned vord(const Word& a) const {
        Word unit;
        return mpz_remove(unit.get_mpz_t(), a.get_mpz_t(), pw[1].get_mpz_t());
    }
    Word divp(const Word& a, unsigned k) const {
        Word out;
        mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), pw[k].get_mpz_t());
        return out;
    }
    Word inv(const Word& a, unsigned r) const {
        Word out;
        mpz_invert(out.get_mpz_t(), a.get_mpz_t(), pw[r].get_mpz_t());
        return out;
    }
    Word from_mpz(const mpz_class& v, unsigned r) const { return reduce(v, r); }
    mpz_class to_mpz(const Word& a) const { return a; }
    bool is_zero(const Word& a) const { return a == 0; }
};

// ---------------------------------------------------------------------------
// Valuation-normalized entries p^e (u + O(p^r)) with explicit accounting of
// the relative precision r that survives cancellation.
//   r > 0 : unit digits known mod p^r
//   r == 0: only "value = 0 mod p^e" is known
//   r < 0 : the exact zero
// ---------------------------------------------------------------------------

template <class Word>
struct FVal {
    long e = 0;
    Word u{};
    int r = -1;

    bool is_unit() const { return r > 0; }
    bool is_zero_at() const { return r == 0; }
    bool is_exact_zero() const { return r < 0; }

    static FVal exact_zero() { return FVal{}; }
    static FVal zero_at(long bound) { return FVal{bound, Word{}, 0}; }
    static FVal unit(long e, Word u, int r) { return FVal{e, std::move(u), r}; }
};

template <class Ops>
FVal<typename Ops::Word> f_mul(const Ops& K, const FVal<typename Ops::Word>& a,
                               const FVal<typename Ops::Word>& b) {
    using F = FVal<typename Ops::Word>;
    if (a.is_exact_zero() || b.is_exact_zero()) return F::exact_zero();
    if (a.is_zero_at() || b.is_zero_at()) return F::zero_at(a.e + b.e);
    const int r = std::min(a.r, b.r);
    return F::unit(a.e + b.e, K.mulmod(a.u, b.u, static_cast<unsigned>(r)), r);
}

template <class Ops>
FVal<typename Ops::Word> f_neg(const Ops& K, const FVal<typename Ops::Word>& a) {
    using F = FVal<typename Ops::Word>;
    if (!a.is_unit()) return a;
    return F::unit(a.e, K.negmod(a.u, static_cast<unsigned>(a.r)), a.r);
}

template <class Ops>
FVal<typename Ops::Word> f_add(const Ops& K, const FVal<typename Ops::Word>& x,
                               const FVal<typename Ops::Word>& y, unsigned rmax) {
    using F = FVal<typename Ops::Word>;
    if (x.is_exact_zero()) return y;
    if (y.is_exact_zero()) return x;
    if (x.is_zero_at() && y.is_zero_at()) return F::zero_at(std::min(x.e, y.e));
    if (x.is_zero_at() || y.is_zero_at()) {
        const F& z = x.is_zero_at() ? x : y;
        const F& u = x.is_zero_at() ? y : x;
        if (u.e >= z.e) return F::zero_at(z.e);
        const int r = static_cast<int>(std::min<long>(u.r, z.e - u.e));
        return F::unit(u.e, K.reduce(u.u, static_cast<unsigned>(r)), r);
    }
    const F& a = x.e <= y.e ? x : y;
    const F& b = x.e <= y.e ? y : x;
    const long abs_known = std::min(a.e + a.r, b.e + b.r);
    const int cap = static_cast<int>(std::min<long>(abs_known - a.e, rmax));
    const long sh = b.e - a.e;
    if (sh >= cap) return F::unit(a.e, K.reduce(a.u, static_cast<unsigned>(cap)), cap);
    const auto s = K.addmod(a.u, K.shift_in(b.u, static_cast<unsigned>(sh),
                                            static_cast<unsigned>(cap)),
                            static_cast<unsigned>(cap));
    if (K.is_zero(s)) return F::zero_at(a.e + cap);
    const unsigned k = K.vord(s);
    return F::unit(a.e + static_cast<long>(k), K.divp(s, k), cap - static_cast<int>(k));
}

template <class Ops>
FVal<typename Ops::Word> f_div_by_unit(const Ops& K, const FVal<typename Ops::Word>& a,
                                       const FVal<typename Ops::Word>& piv) {
    using F = FVal<typename Ops::Word>;
    if (a.is_exact_zero()) return F::exact_zero();
    if (a.is_zero_at()) return F::zero_at(a.e - piv.e);
    const int r = std::min(a.r, piv.r);
    const unsigned ru = static_cast<unsigned>(r);
    return F::unit(a.e - piv.e, K.mulmod(a.u, K.inv(K.reduce(piv.u, ru), ru), ru), r);
}

template <class Ops>
FVal<typename Ops::Word> fval_from_mpz(const Ops& K, const mpz_class& v, unsigned long p,
                                       unsigned rmax, unsigned long abs_bound) {
    using F = FVal<typename Ops::Word>;
    mpz_class value = v;
    if (abs_bound > 0) {
        mpz_mod(value.get_mpz_t(), v.get_mpz_t(), pow_ui(p, abs_bound).get_mpz_t());
        if (value == 0) return F::zero_at(static_cast<long>(abs_bound));
    } else if (value == 0) {
        return F::exact_zero();
    }
    const unsigned long e = ord_p(value, p);
    mpz_class unit_part;
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_remove(unit_part.get_mpz_t(), value.get_mpz_t(), pz.get_mpz_t());
    int r = static_cast<int>(rmax);
    if (abs_bound > 0) r = static_cast<int>(std::min<unsigned long>(rmax, abs_bound - e));
    mpz_class reduced;
    mpz_mod(reduced.get_mpz_t(), unit_part.get_mpz_t(), pow_ui(p, r).get_mpz_t());
    return F::unit(static_cast<long>(e), K.from_mpz(reduced, static_cast<unsigned>(r)), r);
}

// ---------------------------------------------------------------------------
// Fraction-style elimination with full minimal-order pivoting. The pivot
// order e_k is the exact order of the corresponding Schur-complement entry,
// so ord det = sum e_k once every step found a certified pivot. Row updates
// within a step are independent; the step sequence itself is the recurrence.
// ---------------------------------------------------------------------------

template <class Ops>
detail::ElimOutcome eliminate_impl(const Ops& K, std::vector<FVal<typename Ops::Word>>& M,
                                   unsigned long n, unsigned rmax, bool parallel) {
    using F = FVal<typename Ops::Word>;
    detail::ElimOutcome out;
    long ord_sum = 0;
    typename Ops::Word unit_acc = K.from_mpz(mpz_class(1), rmax);
    int unit_r = static_cast<int>(rmax);
    int sign = 1;

    for (unsigned long k = 0; k < n; ++k) {
        long best_e = 0;
        unsigned long bi = 0, bj = 0;
        bool have_unit = false;
        long zero_floor = 0;
        bool have_zero_at = false;

        const long long k_ll = static_cast<long long>(k);
#pragma omp parallel if (parallel)
        {
            long l_best = 0;
            unsigned long l_bi = 0, l_bj = 0;
            bool l_have = false;
            long l_floor = 0;
            bool l_have_zero = false;
#pragma omp for schedule(static) nowait
            for (long long is = k_ll; is < static_cast<long long>(n); ++is) {
                const unsigned long i = static_cast<unsigned long>(is);
                for (unsigned long j = k; j < n; ++j) {
                    const F& v = M[i * n + j];
                    if (v.is_unit()) {
                        if (!l_have || v.e < l_best || (v.e == l_best && (i < l_bi || (i == l_bi && j < l_bj)))) {
                            l_have = true;
                            l_best = v.e;
                            l_bi = i;
                            l_bj = j;
                        }
                    } else if (v.is_zero_at()) {
                        if (!l_have_zero || v.e < l_floor) {
                            l_have_zero = true;
                            l_floor = v.e;
                        }
                    }
                }
            }
#pragma omp critical
            {
                if (l_have && (!have_unit || l_best < best_e ||
                               (l_best == best_e && (l_bi < bi || (l_bi == bi && l_bj < bj))))) {
                    have_unit = true;
                    best_e = l_best;
                    bi = l_bi;
                    bj = l_bj;
                }
                if (l_have_zero && (!have_zero_at || l_floor < zero_floor)) {
                    have_zero_at = true;
                    zero_floor = l_floor;
                }
            }
        }

        if (!have_unit) {
            out.status = have_zero_at ? detail::ElimOutcome::Status::NeedPrecision
                                      : detail::ElimOutcome::Status::ExactSingular;
            return out;
        }
        if (have_zero_at && zero_floor < best_e) {
            // An entry that vanished to its certified depth could still hide
            // a smaller order than the chosen pivot.
            out.status = detail::ElimOutcome::Status::NeedPrecision;
            return out;
        }

        if (bi != k) {
            sign = -sign;
            for (unsigned long j = k; j < n; ++j) std::swap(M[bi * n + j], M[k * n + j]);
        }
        if (bj != k) {
            sign = -sign;
            for (unsigned long i = k; i < n; ++i) std::swap(M[i * n + bj], M[i * n + k]);
        }

        const F piv = M[k * n + k];
        ord_sum += piv.e;
        unit_r = std::min(unit_r, piv.r);
        unit_acc = K.mulmod(unit_acc, piv.u, static_cast<unsigned>(unit_r));

#pragma omp parallel for if (parallel) schedule(static)
        for (long long is = k_ll + 1; is < static_cast<long long>(n); ++is) {
            const unsigned long i = static_cast<unsigned long>(is);
            const F& aik = M[i * n + k];
            if (aik.is_exact_zero()) continue;
            const F mult = f_div_by_unit(K, aik, piv);
            if (!mult.is_exact_zero()) {
                for (unsigned long j = k + 1; j < n; ++j) {
                    M[i * n + j] =
                        f_add(K, M[i * n + j], f_neg(K, f_mul(K, mult, M[k * n + j])), rmax);
                }
            }
            M[i * n + k] = F::exact_zero();
        }
    }

    if (sign < 0) unit_acc = K.negmod(unit_acc, static_cast<unsigned>(unit_r));
    out.status = detail::ElimOutcome::Status::Ok;
    out.ord = ord_sum;
    out.unit = K.to_mpz(unit_acc);
    out.unit_rel = static_cast<unsigned>(unit_r);
    return out;
}

// ---------------------------------------------------------------------------
// Multiplication matrix assembly. Column (i0, j0) holds a * pi^{i0} theta^{j0}
// in the monomial basis; the columns of one theta-chain are built by O(D)
// shift-and-fold steps from the previous one, and chains are independent.
// ---------------------------------------------------------------------------

struct AssemblyContext {
    unsigned long p = 0;
    unsigned long phi = 0;
    unsigned long dy = 0;
    unsigned long D = 0;
    mpz_class mod;                  // p^{abs}
    std::vector<mpz_class> f_tail;  // a_i mod p^{abs}
    std::vector<mpz_class> lift;    // integer-lifted coordinates of a
};

AssemblyContext make_assembly_context(const TowerElement& a, unsigned long abs_precision) {
    const TowerRing& R = a.ring();
    AssemblyContext ctx;
    ctx.p = R.prime();
    ctx.phi = R.deg_x();
    ctx.dy = R.deg_y();
    ctx.D = R.degree();
    ctx.mod = pow_ui(ctx.p, abs_precision);
    ctx.f_tail.reserve(ctx.phi);
    for (const auto& c : R.cyclo().poly().exact_coeffs) {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), c.get_mpz_t(), ctx.mod.get_mpz_t());
        ctx.f_tail.push_back(std::move(r));
    }
    ctx.lift.reserve(ctx.D);
    for (const auto& c : a.coords()) {
        ctx.lift.push_back(c.is_exact_zero() ? mpz_class(0) : c.residue());
    }
    return ctx;
}

void theta_mult_inplace(const AssemblyContext& ctx, std::vector<mpz_class>& w) {
    std::vector<mpz_class> top(w.end() - ctx.phi, w.end());
    for (unsigned long j = ctx.dy - 1; j >= 1; --j) {
        for (unsigned long i = 0; i < ctx.phi; ++i) w[j * ctx.phi + i] = w[(j - 1) * ctx.phi + i];
    }
    for (unsigned long i = 0; i < ctx.phi; ++i) {
        w[i] = top[i] * static_cast<unsigned long>(ctx.p);
        mpz_mod(w[i].get_mpz_t(), w[i].get_mpz_t(), ctx.mod.get_mpz_t());
    }
}

void pi_mult_inplace(const AssemblyContext& ctx, std::vector<mpz_class>& w) {
    for (unsigned long j = 0; j < ctx.dy; ++j) {
        mpz_class* slice = &w[j * ctx.phi];
        mpz_class top = slice[ctx.phi - 1];
        for (unsigned long i = ctx.phi - 1; i >= 1; --i) slice[i] = slice[i - 1];
        slice[0] = 0;
        if (top != 0) {
            for (unsigned long i = 0; i < ctx.phi; ++i) {
                mpz_submul(slice[i].get_mpz_t(), top.get_mpz_t(), ctx.f_tail[i].get_mpz_t());
                mpz_mod(slice[i].get_mpz_t(), slice[i].get_mpz_t(), ctx.mod.get_mpz_t());
            }
        }
    }
}

template <class Ops>
std::vector<FVal<typename Ops::Word>> float_mult_matrix(const Ops& K, const TowerElement& a,
                                                        unsigned long abs_precision,
                                                        unsigned rmax, bool parallel) {
    const AssemblyContext ctx = make_assembly_context(a, abs_precision);
    const unsigned long D = ctx.D;
    std::vector<FVal<typename Ops::Word>> M(D * D);

#pragma omp parallel for if (parallel) schedule(dynamic)
    for (long long j0s = 0; j0s < static_cast<long long>(ctx.dy); ++j0s) {
        const unsigned long j0 = static_cast<unsigned long>(j0s);
        std::vector<mpz_class> w = ctx.lift;
        for (auto& v : w) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), ctx.mod.get_mpz_t());
        for (unsigned long t = 0; t < j0; ++t) theta_mult_inplace(ctx, w);
        for (unsigned long i0 = 0; i0 < ctx.phi; ++i0) {
            if (i0 > 0) pi_mult_inplace(ctx, w);
            const unsigned long col = j0 * ctx.phi + i0;
            for (unsigned long row = 0; row < D; ++row) {
                M[row * D + col] = fval_from_mpz<Ops>(K, w[row], ctx.p, rmax, abs_precision);
            }
        }
    }
    return M;
}

template <class Ops>
detail::ElimOutcome norm_attempt(const TowerElement& a, unsigned long p, unsigned rmax,
                                 bool parallel) {
    const Ops K(p, rmax);
    const unsigned long abs_precision = rmax + 16;
    auto M = float_mult_matrix<Ops>(K, a, abs_precision, rmax, parallel);
    return eliminate_impl<Ops>(K, M, a.ring().degree(), rmax, parallel);
}

}  // namespace

namespace detail {

unsigned max_word_rel_precision(unsigned long p) {
    unsigned r = 0;
    unsigned __int128 v = 1;
    const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 62;
    while (v * p < limit) {
        v *= p;
        ++r;
    }
    return r;
}

ElimOutcome eliminate_ord(const std::vector<mpz_class>& entries, unsigned long n,
                          unsigned long p, unsigned rel_precision, unsigned long abs_bound,
                          bool parallel, bool wide_units) {
    if (entries.size() != n * n) throw std::invalid_argument("eliminate_ord: bad matrix size");
    if (!wide_units && rel_precision <= max_word_rel_precision(p)) {
        U64Ops K(p, rel_precision);
        std::vector<FVal<U64Ops::Word>> M(n * n);
        for (unsigned long i = 0; i < n * n; ++i) {
            M[i] = fval_from_mpz<U64Ops>(K, entries[i], p, rel_precision, abs_bound);
        }
        return eliminate_impl<U64Ops>(K, M, n, rel_precision, parallel);
    }
    MpzOps K(p, rel_precision);
    std::vector<FVal<MpzOps::Word>> M(n * n);
    for (unsigned long i = 0; i < n * n; ++i) {
        M[i] = fval_from_mpz<MpzOps>(K, entries[i], p, rel_precision, abs_bound);
    }
    return eliminate_impl<MpzOps>(K, M, n, rel_precision, parallel);
}

std::vector<mpz_class> mult_matrix(const TowerElement& a, unsigned long abs_precision) {
    const AssemblyContext ctx = make_assembly_context(a, abs_precision);
    const unsigned long D = ctx.D;
    std::vector<mpz_class> M(D * D);
    for (unsigned long j0 = 0; j0 < ctx.dy; ++j0) {
        std::vector<mpz_class> w = ctx.lift;
        for (auto& v : w) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), ctx.mod.get_mpz_t());
        for (unsigned long t = 0; t < j0; ++t) theta_mult_inplace(ctx, w);
        for (unsigned long i0 = 0; i0 < ctx.phi; ++i0) {
            if (i0 > 0) pi_mult_inplace(ctx, w);
            const unsigned long col = j0 * ctx.phi + i0;
            for (unsigned long row = 0; row < D; ++row) M[row * D + col] = w[row];
        }
    }
    return M;
}

}  // namespace detail

NormReport norm_valuation_report(const TowerElement& a, const NormOptions& opts) {
    if (a.is_exact_zero()) {
        throw std::invalid_argument("norm_valuation: the exact zero has no finite valuation");
    }
    const TowerRing& R = a.ring();
    const unsigned long p = R.prime();
    const long certification_window =
        static_cast<long>(R.degree()) * static_cast<long>(R.precision());

    unsigned rel = std::max(1u, opts.start_rel_precision);
    for (;;) {
        const bool wide = opts.force_wide_units || rel > detail::max_word_rel_precision(p);
        detail::ElimOutcome out;
        if (wide) {
            out = norm_attempt<MpzOps>(a, p, rel, opts.parallel);
        } else {
            out = norm_attempt<U64Ops>(a, p, rel, opts.parallel);
        }
        if (out.status == detail::ElimOutcome::Status::Ok) {
            if (out.ord >= certification_window) {
                throw PrecisionError(
                    "norm_valuation: determinant order " + std::to_string(out.ord) +
                        " reaches the coefficient-precision window D*N",
                    static_cast<unsigned long>(out.ord / static_cast<long>(R.degree())) + 2);
            }
            return NormReport{out.ord, true, rel, wide};
        }
        if (out.status == detail::ElimOutcome::Status::ExactSingular) {
            throw std::domain_error("norm_valuation: multiplication matrix is exactly singular");
        }
        if (rel >= opts.max_rel_precision) {
            throw PrecisionError("norm_valuation: no certified pivot at relative precision " +
                                     std::to_string(rel),
                                 2 * rel);
        }
        rel = std::min(rel * 2, opts.max_rel_precision);
    }
}

Valuation norm_valuation(const TowerElement& a) {
    const NormReport rep = norm_valuation_report(a, NormOptions{});
    return Valuation{rep.valuation, rep.exact, false};
}

VerifyOutcome verify_uniformizer(const UniformizerRecipe& recipe) {
    return verify_uniformizer(recipe, NormOptions{});
}

VerifyOutcome verify_uniformizer(const UniformizerRecipe& recipe, const NormOptions& opts) {
    if (recipe.terms.empty()) {
        throw std::invalid_argument("verify_uniformizer: recipe has no terms");
    }
    const TowerRing ring(recipe.p, recipe.m, recipe.n, std::max(1u, recipe.precision));
    TowerElement numerator = ring.zero();
    for (const auto& term : recipe.terms) {
        numerator = numerator + ring.monomial(term.pi_pow, term.theta_pow, term.coeff);
    }
    const NormReport rep = norm_valuation_report(numerator, opts);

    VerifyOutcome out;
    out.v_numerator = rep.valuation;
    out.v_shift = recipe.pi_shift * ring.v_pi() + recipe.theta_shift * ring.v_theta();
    out.v_total = out.v_numerator + out.v_shift;
    out.is_uniformizer = out.v_total == 1;
    out.exact = rep.exact;
    out.rel_precision_used = rep.rel_precision_used;
    return out;
}

ProofMirrorReport proof_mirror_check(unsigned long p, unsigned precision) {
    require_odd_prime(p);
    const TowerRing ring(p, 2, 1, precision);
    const CycloRing& cyclo = ring.cyclo();
    const long phi = static_cast<long>(cyclo.phi());
    const long T = (2 * static_cast<long>(p) - 3) * static_cast<long>(p) + 1;

    // Certifying per-coordinate orders up to ceil((T+1)/phi) = 2 must leave
    // headroom below the working precision.
    {
        const long needed = (T + 1 + phi - 1) / phi;
        detail::require_ord_headroom(precision, needed, "proof_mirror_check");
    }

    TowerElement s1 = ring.theta() + ring.monomial(p - 1, 0, 1);
    for (unsigned long t = 1; t + 1 < p; ++t) {
        const long sign = (t % 2 == 0) ? 1 : -1;  // (-1)^t
        s1 = s1 + ring.monomial(t, 1, PadicInt::from_rational(
                                          sign, static_cast<long>(t + 1), p, precision));
    }
    const TowerElement power = s1.pow(p);

    ProofMirrorReport rep;
    rep.p = p;
    rep.precision = precision;
    rep.leading_exponent = T;

    const CycloElement theta0 = power.theta_component(0);
    const Valuation v0 = cyclo_valuation(theta0);
    rep.theta0_excess = cyclo_valuation(theta0 + cyclo.pi_power(static_cast<unsigned long>(T)));
    rep.theta0_leading_match = v0.exact && v0.value == T && rep.theta0_excess.value >= T + 1;

    const long cross_target = static_cast<long>(p) * T;
    bool cross_above = true;
    bool cross_divisible = true;
    for (unsigned long j = 1; j < ring.deg_y(); ++j) {
        for (unsigned long i = 0; i < ring.deg_x(); ++i) {
            const Ord o = power.coord(i, j).ord();
            if (o.infinite()) continue;
            const long graded = ring.v_pi() * static_cast<long>(i) +
                                ring.v_theta() * static_cast<long>(j) + ring.v_p() * o.value;
            if (graded <= cross_target) cross_above = false;
            if (!o.at_least(1)) cross_divisible = false;
        }
    }
    rep.cross_above = cross_above;
    rep.cross_divisible = cross_divisible;
    rep.certified_valuation = cross_target;
    rep.pass = rep.theta0_leading_match && cross_above && cross_divisible;
    return rep;
}

}  // namespace ptower
