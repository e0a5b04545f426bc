#include "k3lat/diophantine.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace k3lat {

namespace mp = boost::multiprecision;

PrecisionGuard::PrecisionGuard(unsigned bits) : old_digits10_(BigFloat::default_precision()) {
    if (bits < 32) throw std::invalid_argument("precision must be at least 32 bits");
    BigFloat::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1);
}

PrecisionGuard::~PrecisionGuard() { BigFloat::default_precision(old_digits10_); }

namespace {

// 200 bits unless a caller asks otherwise
const bool default_precision_set = [] {
    BigFloat::default_precision(61);
    return true;
}();

BigFloat unit_roundoff() {
    // 2^(1 - p) with p the working precision in bits
    long bits = static_cast<long>(std::floor(BigFloat::default_precision() / 0.30103));
    return mp::ldexp(BigFloat(1), static_cast<int>(1 - bits + 4));
}

BigFloat to_big(const Rat& q) {
    BigFloat n(q.get_num().get_str()), d(q.get_den().get_str());
    return n / d;
}

RealValue from_rat(const Rat& q) {
    RealValue r;
    r.exact = q;
    r.value = to_big(q);
    r.err = mp::abs(r.value) * unit_roundoff();
    return r;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    RealValue parse() {
        RealValue v = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return v;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& m) const {
        throw ExprError("cannot parse '" + s_ + "' at " + std::to_string(i_) + ": " + m);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    static RealValue add(const RealValue& a, const RealValue& b, int sign) {
        RealValue r;
        r.value = sign > 0 ? BigFloat(a.value + b.value) : BigFloat(a.value - b.value);
        r.err = a.err + b.err + mp::abs(r.value) * unit_roundoff();
        if (a.exact && b.exact) r.exact = sign > 0 ? Rat(*a.exact + *b.exact) : Rat(*a.exact - *b.exact);
        if (r.exact) r.err = mp::abs(r.value) * unit_roundoff();
        return r;
    }
    static RealValue mul(const RealValue& a, const RealValue& b) {
        RealValue r;
        r.value = a.value * b.value;
        r.err = mp::abs(a.value) * b.err + mp::abs(b.value) * a.err + a.err * b.err + mp::abs(r.value) * unit_roundoff();
        if (a.exact && b.exact) {
            r.exact = *a.exact * *b.exact;
            r.err = mp::abs(r.value) * unit_roundoff();
        }
        return r;
    }
    RealValue div(const RealValue& a, const RealValue& b) const {
        if (b.exact && *b.exact == 0) fail("division by zero");
        if (mp::abs(b.value) <= b.err) fail("divisor not separated from zero at this precision");
        RealValue r;
        r.value = a.value / b.value;
        r.err = (a.err + mp::abs(r.value) * b.err) / (mp::abs(b.value) - b.err) + mp::abs(r.value) * unit_roundoff();
        if (a.exact && b.exact) {
            r.exact = *a.exact / *b.exact;
            r.err = mp::abs(r.value) * unit_roundoff();
        }
        return r;
    }
    // x^k with k rational; negative bases only for odd denominators
    RealValue power(const RealValue& x, const Rat& k) const {
        if (k.get_den() == 1 && x.exact && abs(k.get_num()) <= 4096) {
            long e = k.get_num().get_si();
            Rat base = *x.exact, acc = 1;
            if (e < 0 && base == 0) fail("zero to a negative power");
            for (long j = 0; j < std::labs(e); ++j) acc *= base;
            return from_rat(e < 0 ? Rat(1 / acc) : acc);
        }
        bool neg = x.value < 0;
        if (neg && k.get_den() % 2 == 0) fail("even root of a negative number");
        BigFloat ax = mp::abs(x.value);
        if (ax <= x.err && k < 1) fail("root of a value not separated from zero");
        BigFloat kk = to_big(k);
        RealValue r;
        r.value = mp::pow(ax, kk);
        if (neg && k.get_num() % 2 != 0) r.value = -r.value;
        // |f'| on [|x| - e, |x| + e] is bounded at an endpoint since t^(k-1) is monotone
        BigFloat lo = ax - x.err, hi = ax + x.err;
        if (lo < 0) lo = 0;
        BigFloat km1 = kk - 1;
        BigFloat d1 = (lo == 0 && km1 < 0) ? BigFloat(0) : mp::pow(lo, km1), d2 = mp::pow(hi, km1);
        r.err = mp::abs(kk) * mp::max(d1, d2) * x.err + mp::abs(r.value) * unit_roundoff() * 4;
        return r;
    }

    RealValue expr() {
        RealValue v = term();
        for (;;) {
            if (eat('+'))
                v = add(v, term(), 1);
            else if (eat('-'))
                v = add(v, term(), -1);
            else
                return v;
        }
    }
    RealValue term() {
        RealValue v = unary();
        for (;;) {
            if (eat('*'))
                v = mul(v, unary());
            else if (eat('/'))
                v = div(v, unary());
            else
                return v;
        }
    }
    RealValue unary() {
        if (eat('-')) {
            RealValue v = unary();
            v.value = -v.value;
            if (v.exact) v.exact = -*v.exact;
            return v;
        }
        if (eat('+')) return unary();
        return pow_expr();
    }
    RealValue pow_expr() {
        RealValue b = atom();
        if (eat('^')) {
            RealValue e = unary();  // right associative
            if (!e.exact) fail("exponent must be rational");
            return power(b, *e.exact);
        }
        return b;
    }
    RealValue atom() {
        skip();
        if (eat('(')) {
            RealValue v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) return number();
        if (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) {
            std::string name;
            while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) name += s_[i_++];
            if (name == "pi") {
                RealValue r;
                r.value = mp::acos(BigFloat(-1));
                r.err = r.value * unit_roundoff();
                return r;
            }
            if (!eat('(')) fail("expected '(' after " + name);
            std::vector<RealValue> args{expr()};
            while (eat(',')) args.push_back(expr());
            if (!eat(')')) fail("missing ')'");
            if (name == "sqrt" && args.size() == 1) return power(args[0], qq(1, 2));
            if (name == "cbrt" && args.size() == 1) return power(args[0], qq(1, 3));
            if (name == "liouville" && (args.size() == 1 || args.size() == 2)) return liouville(args);
            fail("unknown function " + name);
        }
        fail("expected a number");
    }
    RealValue number() {
        std::string digits, frac;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits += s_[i_++];
        if (i_ < s_.size() && s_[i_] == '.') {
            ++i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) frac += s_[i_++];
        }
        if (digits.empty() && frac.empty()) fail("empty number");
        Int num((digits.empty() ? "0" : digits) + frac, 10);
        Int den = 1;
        for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
        return from_rat(qq(num, den));
    }
    RealValue liouville(const std::vector<RealValue>& args) const {
        auto as_long = [&](const RealValue& v) {
            if (!v.exact || v.exact->get_den() != 1) fail("liouville() needs integer arguments");
            return v.exact->get_num().get_si();
        };
        long K = as_long(args[0]), base = args.size() > 1 ? as_long(args[1]) : 10;
        if (K < 1 || K > 7 || base < 2) fail("liouville(K, b) needs 1 <= K <= 7 and b >= 2");
        Rat s = 0;
        long f = 1;
        for (long k = 1; k <= K; ++k) {
            f *= k;
            Int d;
            mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(f));
            s += qq(Int(1), d);
        }
        return from_rat(s);
    }
};

}  // namespace

RealValue parse_real(const std::string& expr, unsigned bits) {
    PrecisionGuard g(bits);
    RealValue v = Parser(expr).parse();
    v.expr = expr;
    return v;
}

namespace {

// distance of x to Z, and of an exact rational to Z
BigFloat dist_z(const BigFloat& x) {
    BigFloat r = mp::round(x);
    return mp::abs(x - r);
}

Rat dist_z(const Rat& x) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Rat t = x - Rat(f);
    return std::min(t, Rat(1 - t));
}

}  // namespace

Distance pair_distance(const RealValue& p, const RealValue& q, long n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    Distance d;
    const RealValue* parts[] = {&p, &q};
    bool all_exact = p.exact && q.exact;
    if (all_exact) {
        Rat s = dist_z(Rat(*p.exact * n)) + dist_z(Rat(*q.exact * n));
        d.exact_zero = s == 0;
        d.value = to_big(s);
        d.err = d.value * unit_roundoff();
        return d;
    }
    d.value = 0;
    d.err = 0;
    for (const RealValue* v : parts) {
        if (v->exact) {
            d.value += to_big(dist_z(Rat(*v->exact * n)));
            continue;
        }
        BigFloat t = v->value * n;
        d.value += dist_z(t);
        // dist(., Z) is 1-Lipschitz
        d.err += v->err * n + mp::abs(t) * unit_roundoff();
    }
    return d;
}

namespace {

using QPoly = std::vector<Rat>;  // low -> high

void trim(QPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

QPoly to_qpoly(const IntPoly& p) {
    QPoly q;
    for (const auto& c : p.c) q.push_back(Rat(c));
    trim(q);
    return q;
}

QPoly qderiv(const QPoly& p) {
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
    if (d.empty()) d.push_back(0);
    return d;
}

QPoly qrem(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
        Rat f = a.back() / b.back();
        std::size_t sh = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= f * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) a.push_back(0);
    }
    return a;
}

bool is_zero(const QPoly& p) { return p.size() == 1 && p[0] == 0; }

Rat qeval(const QPoly& p, const Rat& x) {
    Rat v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> ch{p, qderiv(p)};
    while (!is_zero(ch.back()) && ch.back().size() > 1) {
        QPoly r = qrem(ch[ch.size() - 2], ch.back());
        for (auto& c : r) c = -c;
        if (is_zero(r)) break;
        ch.push_back(r);
    }
    return ch;
}

int sign_changes(const std::vector<QPoly>& ch, const Rat& x) {
    int changes = 0, last = 0;
    for (const auto& p : ch) {
        Rat v = qeval(p, x);
        int s = sgn(v);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

QPoly qgcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!is_zero(b)) {
        QPoly r = qrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool has_rational_root(const IntPoly& p) {
    // rational root theorem: r = u / v with u | c_0, v | c_d
    std::size_t lowest = 0;
    while (lowest < p.c.size() && p.c[lowest] == 0) ++lowest;
    if (lowest > 0) return true;  // root 0
    auto divisors = [](Int n) {
        n = abs(n);
        std::vector<Int> d;
        if (n > 1000000) throw std::invalid_argument("coefficients too large for the rational root test");
        for (Int k = 1; k <= n; ++k)
            if (n % k == 0) d.push_back(k);
        return d;
    };
    QPoly q = to_qpoly(p);
    for (const auto& u : divisors(p.c.front()))
        for (const auto& v : divisors(p.lead()))
            for (int s : {1, -1})
                if (qeval(q, qq(s * u, v)) == 0) return true;
    return false;
}

}  // namespace

std::size_t sturm_count(const IntPoly& p, const Rat& lo, const Rat& hi) {
    auto ch = sturm_chain(to_qpoly(p));
    return static_cast<std::size_t>(sign_changes(ch, lo) - sign_changes(ch, hi));
}

LiouvilleCertificate liouville_certificate(const IntPoly& minpoly, const Rat& lo, const Rat& hi) {
    const int d = minpoly.degree();
    if (d < 1 || minpoly.lead() == 0) throw std::invalid_argument("polynomial must be nonconstant");
    if (d == 1) throw std::invalid_argument("degree 1: the root is rational");
    if (!(lo < hi)) throw std::invalid_argument("empty interval");
    QPoly q = to_qpoly(minpoly);
    if (qgcd(q, qderiv(q)).size() > 1) throw std::invalid_argument("polynomial is not squarefree, hence reducible");
    if (has_rational_root(minpoly)) throw std::invalid_argument("polynomial has a rational root, hence reducible");
    if (qeval(q, lo) == 0 || qeval(q, hi) == 0) throw std::invalid_argument("interval endpoint is a root");
    if (sturm_count(minpoly, lo, hi) != 1) throw std::invalid_argument("interval does not isolate exactly one root");

    // shrink to [a, b] around the root by bisection, keeping a margin to lo, hi
    Rat a = lo, b = hi;
    int sa = sgn(qeval(q, a));
    for (int it = 0; it < 60; ++it) {
        Rat m = (a + b) / 2;
        int sm = sgn(qeval(q, m));
        if (sm == 0) throw std::logic_error("rational root inside the interval");
        if (sm == sa)
            a = m;
        else
            b = m;
    }
    Rat r = std::min(a - lo, hi - b);  // distance from the root to the outside of [lo, hi]

    // M >= max |P'| on [lo, hi]
    Rat X = std::max(abs(lo), abs(hi));
    Rat M = 0, pw = 1;
    for (std::size_t k = 1; k < q.size(); ++k) {
        M += abs(q[k]) * static_cast<unsigned long>(k) * pw;
        pw *= X;
    }
    // |P(m/n)| >= 1/n^d for m/n in [lo, hi], so |n beta - m| >= 1/(M n^{d-1});
    // outside, |n beta - m| >= n r >= r n^{-(d-1)}.
    Rat A = std::min(Rat(1 / M), r);
    LiouvilleCertificate c;
    c.A = A.get_d();
    c.A_exact = to_big(A);
    c.alpha = d - 1;
    c.source = "Liouville bound for the root of " + minpoly.to_string() + " in [" + to_string(lo) + ", " +
               to_string(hi) + "], A = min(1/max|P'|, margin) = " + to_string(A);
    return c;
}

DiophantineReport check_pair(const RealValue& p, const RealValue& q, long n_max,
                             std::optional<LiouvilleCertificate> cert, const CheckOptions& opt) {
    if (n_max < opt.min_n) throw std::invalid_argument("n_max must be at least " + std::to_string(opt.min_n));
    DiophantineReport rep;
    rep.n_max = n_max;
    rep.precision_bits = static_cast<unsigned>(std::floor(BigFloat::default_precision() / 0.30103));
    rep.certificate = cert;
    if (cert) rep.certificate_holds = true;

    BigFloat best = -1;
    bool straddle = false;
    for (long n = 1; n <= n_max; ++n) {
        Distance d = pair_distance(p, q, n);
        if (d.exact_zero) {
            rep.per_n.push_back({n, d.value, d.err, std::numeric_limits<double>::infinity()});
            rep.verdict = "fail";
            rep.reason = "zero";
            rep.witness = n;
            break;
        }
        if (cert && *rep.certificate_holds) {
            BigFloat bound = cert->A_exact / mp::pow(BigFloat(n), cert->alpha);
            // the certificate must hold for the true value, so test the upper end of the interval
            if (d.value + d.err < bound) {
                rep.certificate_holds = false;
                rep.certificate_violation = n;
            }
        }
        if (best < 0 || d.value < best) {
            best = d.value;
            double e = n > 1 ? static_cast<double>(-mp::log(d.value) / std::log(static_cast<double>(n))) : 0.0;
            rep.per_n.push_back({n, d.value, d.err, e});
            if (n >= opt.min_n && d.straddles_zero()) straddle = true;
        }
    }
    if (rep.verdict == "fail") return rep;

    std::vector<const DeltaRecord*> recs;
    for (const auto& r : rep.per_n)
        if (r.n >= opt.min_n) recs.push_back(&r);
    if (recs.empty()) {
        rep.verdict = "inconclusive";
        rep.reason = "no record minima beyond n = " + std::to_string(opt.min_n);
        return rep;
    }
    double amax = 0;
    for (const auto* r : recs) amax = std::max(amax, r->exponent);
    rep.fitted_alpha = amax;
    double A = std::numeric_limits<double>::infinity();
    for (const auto* r : recs)
        A = std::min(A, static_cast<double>(r->delta * mp::pow(BigFloat(r->n), amax)));
    rep.fitted_A = A;

    if (straddle) {
        rep.verdict = "inconclusive";
        rep.reason = "precision: an error interval contains 0";
        return rep;
    }
    if (amax > opt.superpoly_exponent) {
        rep.verdict = "fail";
        rep.reason = "superpolynomial";
        for (const auto* r : recs)
            if (r->exponent == amax) rep.witness = r->n;
        return rep;
    }
    std::size_t half = recs.size() / 2;
    double early = 0, late = 0;
    for (std::size_t i = 0; i < recs.size(); ++i) (i < half ? early : late) = std::max(i < half ? early : late, recs[i]->exponent);
    if (half > 0 && late > early + opt.drift) {
        rep.verdict = "inconclusive";
        rep.reason = "record exponents still growing";
        return rep;
    }
    rep.verdict = "pass";
    rep.reason = "record exponents bounded by " + std::to_string(amax);
    return rep;
}

double elliptic_distance(double a, double b) {
    return std::min(std::fabs(a), std::fabs(1 - a)) + std::min(std::fabs(b), std::fabs(1 - b));
}

std::vector<double> bundle_distance_seq(const RealValue& p, const RealValue& q, long n_max) {
    std::vector<double> out;
    for (long n = 1; n <= n_max; ++n) {
        auto frac01 = [n](const RealValue& v) {
            if (v.exact) {
                Rat t = *v.exact * n;
                Int f;
                mpz_fdiv_q(f.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
                return Rat(t - Rat(f)).get_d();
            }
            BigFloat t = v.value * n;
            return static_cast<double>(t - mp::floor(t));
        };
        out.push_back(elliptic_distance(frac01(p), frac01(q)));
    }
    return out;
}

}  // namespace k3lat
