#include "kesten/identities.hpp"

#include <sstream>

#include "kesten/quad.hpp"

namespace kesten {

namespace {

Integer intPow(const Integer& base, long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

int parity(long n) { return (n % 2 == 0) ? 1 : -1; }

std::string polyStr(const Polynomial<Rational>& p) {
    std::ostringstream os;
    os << '[';
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ", ";
        os << c[i].toString();
    }
    os << ']';
    return os.str();
}

IdentityReport pass(std::string id, std::string range) {
    return IdentityReport{std::move(id), std::move(range), true, std::nullopt};
}

IdentityReport fail(std::string id, std::string range, std::string at, std::string lhs,
                    std::string rhs) {
    return IdentityReport{std::move(id), std::move(range), false,
                          Counterexample{std::move(at), std::move(lhs), std::move(rhs)}};
}

std::string mRange(int mMax) { return "1 <= m <= " + std::to_string(mMax); }

IdentityReport checkFourForms(const std::string& id, int mMax,
                              const PolyFormsBuilder& forms,
                              const std::array<const char*, 4>& names) {
    if (mMax < 1) throw UsageError(id + " needs mMax >= 1");
    for (int m = 1; m <= mMax; ++m) {
        auto f = forms(m);
        for (int i = 1; i < 4; ++i)
            if (!polyEq(f[0], f[i]))
                return fail(id, mRange(mMax),
                            "m=" + std::to_string(m) + ", " + names[i] + " vs " + names[0],
                            polyStr(f[0]), polyStr(f[i]));
    }
    return pass(id, mRange(mMax));
}

} // namespace

IdentityReport verifyProp1i(int mMax) {
    return verifyProp1i(mMax, [](int m) { return momentPolyForms(m); });
}

IdentityReport verifyProp1i(int mMax, const PolyFormsBuilder& forms) {
    return checkFourForms("prop1i", mMax, forms, {"ballot", "triangleT", "triangleB", "catalan"});
}

std::array<Polynomial<Rational>, 4> xPolyForms(int m) {
    return xPolyForms(m, SequenceHooks{});
}

std::array<Polynomial<Rational>, 4> xPolyForms(int m, const SequenceHooks& h) {
    if (m < 1) throw UsageError("x-polynomial forms start at m = 1");
    using P = Polynomial<Rational>;
    P x(std::vector<Rational>{Rational(0), Rational(1)});
    P onePlusX(std::vector<Rational>{Rational(1), Rational(1)});

    std::vector<Rational> sCoeffs;
    for (long k = 0; k <= m; ++k) sCoeffs.push_back(Rational(h.ballotS(m, k)));
    P formS{std::move(sCoeffs)};

    std::vector<Rational> bInner(m, Rational(0));
    for (long k = 0; k < m; ++k) bInner[m - 1 - k] = Rational(h.triangleB(m, k + 1));
    P formB = polyMul(onePlusX, P{std::move(bInner)});

    P formT, sumD;
    for (long k = 0; k < m; ++k) {
        formT = polyAdd(formT, polyScale(polyMul(polyPow(x, k), polyPow(onePlusX, m - k)),
                                         Rational(h.triangleT(m - 1, k))));
        sumD = polyAdd(sumD,
                       polyScale(polyMul(polyPow(x, k + 1), polyPow(onePlusX, 2 * m - 2 * k - 1)),
                                 Rational(h.catalan(k))));
    }
    P formD = polyAdd(polyPow(onePlusX, 2 * m), polyScale(sumD, Rational(-1)));
    return {formS, formB, formT, formD};
}

IdentityReport verifyProp1ii(int mMax) {
    return verifyProp1ii(mMax, [](int m) { return xPolyForms(m); });
}

IdentityReport verifyProp1ii(int mMax, const PolyFormsBuilder& forms) {
    return checkFourForms("prop1ii", mMax, forms, {"ballot", "triangleB", "triangleT", "catalan"});
}

IdentityReport verifyEx1a(int mMax) { return verifyEx1a(mMax, SequenceHooks{}); }

IdentityReport verifyEx1a(int mMax, const SequenceHooks& h) {
    if (mMax < 1) throw UsageError("ex1a needs mMax >= 1");
    const Integer minusTwo(-2), two(2);
    for (int m = 1; m <= mMax; ++m) {
        Integer viaC(1), viaS(0), viaB(0), viaT(0);
        for (long k = 0; k < m; ++k) {
            viaC -= Integer(2) * intPow(minusTwo, k) * h.catalan(k);
            viaB -= intPow(minusTwo, m - 1 - k) * h.triangleB(m, k + 1);
            viaT += intPow(two, k) * h.triangleT(m - 1, k);
        }
        viaT *= parity(m);
        for (long k = 0; k <= m; ++k) viaS += intPow(minusTwo, k) * h.ballotS(m, k);
        const char* names[] = {"ballot", "triangleB", "triangleT"};
        const Integer* vals[] = {&viaS, &viaB, &viaT};
        for (int i = 0; i < 3; ++i)
            if (*vals[i] != viaC)
                return fail("ex1a", mRange(mMax),
                            "m=" + std::to_string(m) + ", " + names[i] + " vs catalan",
                            viaC.get_str(), vals[i]->get_str());
    }
    return pass("ex1a", mRange(mMax));
}

namespace {

// re and imCoef of omega^j, exact (cos(j pi/3) and sin(j pi/3)/(sqrt 3/2))
std::pair<Rational, Rational> omegaParts(long j) {
    long jj = ((j % 6) + 6) % 6;
    return zeta6Parts(quadPow(omega(), jj));
}

} // namespace

IdentityReport verifyEx1b(int mMax) { return verifyEx1b(mMax, SequenceHooks{}); }

IdentityReport verifyEx1b(int mMax, const SequenceHooks& h) {
    if (mMax < 1) throw UsageError("ex1b needs mMax >= 1");
    for (int m = 1; m <= mMax; ++m) {
        auto forms = momentPolyForms(m);
        QuadElement base = polyEval(forms[0], omega());
        const char* formNames[] = {"triangleT", "triangleB", "catalan"};
        for (int i = 1; i < 4; ++i) {
            QuadElement v = polyEval(forms[i], omega());
            if (!(v == base))
                return fail("ex1b", mRange(mMax),
                            "m=" + std::to_string(m) + ", raw " + formNames[i - 1] + " vs ballot",
                            base.toString(), v.toString());
        }

        Rational re0(1), im0(0);
        for (long k = 0; k < m; ++k) {
            Rational c(h.catalan(k));
            re0 -= c / Rational(2);
            im0 += c;
        }
        Rational reT(0), imT(0), reS(0), imS(0), reB(0), imB(0);
        for (long k = 0; k < m; ++k) {
            auto [re, im] = omegaParts(m - k);
            Rational c(h.triangleT(m - 1, k));
            reT += re * c;
            imT += im * c;
            auto [re2, im2] = omegaParts(2 * k + 1);
            Rational b(h.triangleB(m, k + 1));
            reB += re2 * b;
            imB += im2 * b;
        }
        for (long k = 0; k <= m; ++k) {
            auto [re, im] = omegaParts(2 * (m - k));
            Rational s(h.ballotS(m, k));
            reS += re * s;
            imS += im * s;
        }
        const char* names[] = {"triangleT", "ballot", "triangleB"};
        const Rational* res[] = {&reT, &reS, &reB};
        const Rational* ims[] = {&imT, &imS, &imB};
        for (int i = 0; i < 3; ++i) {
            if (*res[i] != re0)
                return fail("ex1b", mRange(mMax),
                            "m=" + std::to_string(m) + ", real split " + names[i],
                            re0.toString(), res[i]->toString());
            if (*ims[i] != im0)
                return fail("ex1b", mRange(mMax),
                            "m=" + std::to_string(m) + ", imaginary split " + names[i],
                            im0.toString(), ims[i]->toString());
        }
    }
    return pass("ex1b", mRange(mMax));
}

IdentityReport verifyEx1c(int mMax) { return verifyEx1c(mMax, SequenceHooks{}); }

IdentityReport verifyEx1c(int mMax, const SequenceHooks& h) {
    if (mMax < 1) throw UsageError("ex1c needs mMax >= 1");
    for (int m = 1; m <= mMax; ++m) {
        auto forms = momentPolyForms(m);
        QuadElement base = polyEval(forms[0], goldenRatio());
        const char* formNames[] = {"triangleT", "triangleB", "catalan"};
        for (int i = 1; i < 4; ++i) {
            QuadElement v = polyEval(forms[i], goldenRatio());
            if (!(v == base))
                return fail("ex1c", mRange(mMax),
                            "m=" + std::to_string(m) + ", raw " + formNames[i - 1] + " vs ballot",
                            base.toString(), v.toString());
        }

        Integer altC(0);
        for (long k = 0; k < m; ++k) altC += Integer(parity(k)) * h.catalan(k);
        Integer sL(0), sF(0), tL(0), tF(0), bL(0), bF(0);
        for (long k = 0; k <= m; ++k) {
            Integer s = h.ballotS(m, k);
            sL += Integer(parity(k)) * s * h.lucas(m - 2 * k);
            sF += Integer(-parity(k)) * s * h.fibonacci(m - 2 * k);
        }
        for (long k = 0; k < m; ++k) {
            Integer t = h.triangleT(m - 1, k);
            tL += t * h.lucas(k);
            tF += t * h.fibonacci(k);
            Integer b = h.triangleB(m, k + 1);
            bL += Integer(parity(k)) * b * h.lucas(m - 2 * k - 1);
            bF += Integer(parity(k)) * b * h.fibonacci(m - 2 * k - 1);
        }
        Integer rhsL = Integer(parity(m)) * h.lucas(m) - Integer(parity(m)) * h.lucas(m + 1) * altC;
        Integer rhsF =
            Integer(parity(m)) * h.fibonacci(m) - Integer(parity(m)) * h.fibonacci(m + 1) * altC;

        const char* names[] = {"triangleT", "triangleB", "alternating catalan"};
        {
            const Integer* vals[] = {&tL, &bL, &rhsL};
            for (int i = 0; i < 3; ++i)
                if (*vals[i] != sL)
                    return fail("ex1c", mRange(mMax),
                                "m=" + std::to_string(m) + ", Lucas chain " + names[i] + " vs ballot",
                                sL.get_str(), vals[i]->get_str());
        }
        {
            const Integer* vals[] = {&tF, &bF, &rhsF};
            for (int i = 0; i < 3; ++i)
                if (*vals[i] != sF)
                    return fail("ex1c", mRange(mMax),
                                "m=" + std::to_string(m) + ", Fibonacci chain " + names[i] +
                                    " vs ballot",
                                sF.get_str(), vals[i]->get_str());
        }

        // basis link: the raw value times (-1)^m phi^m has coordinates
        // (L/2, F/2) with L, F the two chain values
        QuadElement linked = base * quadPow(goldenRatio(), m) * Rational(parity(m));
        if (Rational(2) * linked.a() != Rational(sL) || Rational(2) * linked.b() != Rational(sF))
            return fail("ex1c", mRange(mMax), "m=" + std::to_string(m) + ", coordinate link",
                        "(" + Rational(sL).toString() + ", " + Rational(sF).toString() + ")",
                        "(" + (Rational(2) * linked.a()).toString() + ", " +
                            (Rational(2) * linked.b()).toString() + ")");
    }
    return pass("ex1c", mRange(mMax));
}

IdentityReport verifyEx2a(int mMax) { return verifyEx2a(mMax, SequenceHooks{}); }

IdentityReport verifyEx2a(int mMax, const SequenceHooks& h) {
    if (mMax < 1) throw UsageError("ex2a needs mMax >= 1");
    const Integer two(2);
    for (int m = 1; m <= mMax; ++m) {
        Integer viaS(0), viaB(0), viaT(0), viaC = intPow(two, 2 * m);
        for (long k = 0; k <= m; ++k) viaS += h.ballotS(m, k);
        for (long k = 0; k < m; ++k) {
            viaB += h.triangleB(m, k + 1);
            viaT += h.triangleT(m - 1, k) * intPow(two, m - k);
            viaC -= h.catalan(k) * intPow(two, 2 * m - 2 * k - 1);
        }
        viaB *= 2;
        const char* names[] = {"triangleB", "triangleT", "catalan"};
        const Integer* vals[] = {&viaB, &viaT, &viaC};
        for (int i = 0; i < 3; ++i)
            if (*vals[i] != viaS)
                return fail("ex2a", mRange(mMax),
                            "m=" + std::to_string(m) + ", " + names[i] + " vs ballot",
                            viaS.get_str(), vals[i]->get_str());
    }
    return pass("ex2a", mRange(mMax));
}

IdentityReport verifyEx2b(int mMax) { return verifyEx2b(mMax, SequenceHooks{}); }

IdentityReport verifyEx2b(int mMax, const SequenceHooks& h) {
    if (mMax < 1) throw UsageError("ex2b needs mMax >= 1");
    const Integer minusTwo(-2);
    for (int m = 1; m <= mMax; ++m) {
        Integer viaS(0), viaB(0), viaT(0);
        for (long k = 0; k <= m; ++k) viaS += h.ballotS(m, k) * intPow(minusTwo, m - k);
        for (long k = 0; k < m; ++k) {
            viaB += h.triangleB(m, k + 1) * intPow(minusTwo, k);
            viaT += Integer(parity(k)) * h.triangleT(m - 1, k);
        }
        viaS *= parity(m);
        viaB *= -parity(m);
        Rational viaC = Rational(Integer(1), intPow(Integer(2), m));
        for (long k = 0; k < m; ++k)
            viaC += Rational(Integer(parity(k)) * h.catalan(k), intPow(Integer(2), m - k));
        Rational viaFine = Rational(-parity(m)) * h.fine(m - 1);

        Rational ref(viaS);
        struct Side { const char* name; Rational value; };
        Side sides[] = {{"triangleB", Rational(viaB)},
                        {"triangleT", Rational(viaT)},
                        {"catalan", viaC},
                        {"fine", viaFine}};
        for (const auto& s : sides)
            if (s.value != ref)
                return fail("ex2b", mRange(mMax),
                            "m=" + std::to_string(m) + ", " + s.name + " vs ballot",
                            ref.toString(), s.value.toString());
    }
    return pass("ex2b", mRange(mMax));
}

namespace {

// synthetic division of p by (x + 1): p = (x+1) q + rem
std::pair<Polynomial<Rational>, Rational> divideByXPlusOne(const Polynomial<Rational>& p) {
    const auto& c = p.coeffs();
    if (c.empty()) return {Polynomial<Rational>(), Rational(0)};
    std::size_t n = c.size() - 1;
    if (n == 0) return {Polynomial<Rational>(), c[0]};
    std::vector<Rational> q(n, Rational(0));
    q[n - 1] = c[n];
    for (std::size_t i = n - 1; i >= 1; --i) q[i - 1] = c[i] - q[i];
    Rational rem = c[0] - q[0];
    return {Polynomial<Rational>(std::move(q)), rem};
}

} // namespace

IdentityReport verifyEx2c(int mMax) { return verifyEx2c(mMax, SequenceHooks{}); }

IdentityReport verifyEx2c(int mMax, const SequenceHooks& h) {
    if (mMax < 1) throw UsageError("ex2c needs mMax >= 1");
    for (int m = 1; m <= mMax; ++m) {
        Integer viaS(0), viaB(0);
        std::vector<Rational> sRow;
        for (long k = 0; k <= m; ++k) {
            Integer s = h.ballotS(m, k);
            viaS += Integer(-parity(k)) * Integer(k) * s;
            sRow.push_back(Rational(s));
        }
        for (long k = 0; k < m; ++k)
            viaB += Integer(parity(m - 1 - k)) * h.triangleB(m, k + 1);
        Integer viaC = Integer(parity(m - 1)) * h.catalan(m - 1);

        std::string atM = "m=" + std::to_string(m);
        if (viaB != viaS)
            return fail("ex2c", mRange(mMax), atM + ", triangleB vs ballot", viaS.get_str(),
                        viaB.get_str());
        if (viaC != viaS)
            return fail("ex2c", mRange(mMax), atM + ", catalan vs ballot", viaS.get_str(),
                        viaC.get_str());

        // limit interpretation: sum_k S_{m,k} x^k is divisible by x + 1 and the
        // quotient at -1 recovers the value above
        Polynomial<Rational> p{std::move(sRow)};
        auto [q, rem] = divideByXPlusOne(p);
        Polynomial<Rational> xPlusOne(std::vector<Rational>{Rational(1), Rational(1)});
        if (!rem.isZero() || !polyEq(polyMul(xPlusOne, q), p))
            return fail("ex2c", mRange(mMax), atM + ", ballot polynomial not divisible by x+1",
                        polyStr(p), "remainder " + rem.toString());
        Rational qAt = polyEval(q, Rational(-1));
        if (qAt != Rational(viaS))
            return fail("ex2c", mRange(mMax), atM + ", quotient value at -1",
                        Rational(viaS).toString(), qAt.toString());
    }
    return pass("ex2c", mRange(mMax));
}

IdentityReport verifyFine(int nMax) { return verifyFine(nMax, SequenceHooks{}); }

IdentityReport verifyFine(int nMax, const SequenceHooks& h) {
    if (nMax < 0) throw UsageError("fine needs nMax >= 0");
    std::string range = "0 <= n <= " + std::to_string(nMax);
    const Integer minusTwo(-2);
    for (long n = 0; n <= nMax; ++n) {
        Rational phi = h.fine(n);
        Integer viaB(0), viaT(0), viaS(0);
        for (long j = 0; j <= n; ++j) {
            viaB += h.triangleB(n + 1, j + 1) * intPow(minusTwo, j);
            viaT += h.triangleT(n, j) * Integer(parity(n - j));
        }
        for (long j = 0; j <= n + 1; ++j)
            viaS -= h.ballotS(n + 1, j) * intPow(minusTwo, n + 1 - j);
        struct Side { const char* name; Integer value; };
        Side sides[] = {{"triangleB", viaB}, {"triangleT", viaT}, {"ballot", viaS}};
        for (const auto& s : sides)
            if (Rational(s.value) != phi)
                return fail("fine", range, "n=" + std::to_string(n) + ", " + s.name,
                            phi.toString(), Rational(s.value).toString());
    }
    return pass("fine", range);
}

HankelFamily parseHankelFamily(const std::string& name) {
    if (name == "kestenEven") return HankelFamily::kestenEven;
    if (name == "truncatedConvex") return HankelFamily::truncatedConvex;
    throw UsageError("unknown hankel family '" + name + "'");
}

std::string hankelFamilyName(HankelFamily family) {
    return family == HankelFamily::kestenEven ? "kestenEven" : "truncatedConvex";
}

Rational detExact(const std::vector<std::vector<Rational>>& m) {
    std::size_t n = m.size();
    if (n == 0) return Rational(1);
    for (const auto& row : m)
        if (row.size() != n) throw UsageError("determinant needs a square matrix");

    // clear denominators row by row, then run fraction-free elimination
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Integer l(1);
        for (const auto& x : m[i]) l = lcm(l, x.den());
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = m[i][j] * Rational(l);
            a[i][j] = v.num();
        }
        scale *= l;
    }

    int sign = 1;
    Integer prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return Rational(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
        prev = a[k][k];
    }
    return Rational(Integer(sign) * a[n - 1][n - 1], scale);
}

IdentityReport hankelCheck(HankelFamily family, const Rational& t, const Rational& d,
                           int size) {
    if (size < 1) throw UsageError("hankel size must be positive");
    if (t < Rational(1, 2) || t > Rational(6, 5))
        throw ParameterError("t must be in [1/2, 6/5]");
    if (family == HankelFamily::truncatedConvex && (d.sign() < 0 || d > Rational(1)))
        throw ParameterError("d must be in [0, 1]");

    std::string id = "hankel-" + hankelFamilyName(family);
    std::ostringstream rs;
    rs << "t=" << t;
    if (family == HankelFamily::truncatedConvex) rs << ", d=" << d;
    rs << ", size=" << size;
    std::string range = rs.str();

    std::vector<Rational> s;
    s.reserve(2 * size + 1);
    if (family == HankelFamily::kestenEven) {
        KestenParams params = classifyParams(Rational(1), t);
        for (int m = 0; m <= 2 * size; ++m) s.push_back(momentClosed(m, params).value);
    } else {
        Rational oneMinusT = Rational(1) - t;
        Rational sum(0);
        Rational term = t;
        for (int m = 0; m <= 2 * size; ++m) {
            s.push_back(Rational(1) - d * sum);
            sum += term * Rational(catalan(m));
            term *= t * oneMinusT;
        }
    }

    auto minor = [&](int order, int shift) {
        std::vector<std::vector<Rational>> h(order, std::vector<Rational>(order));
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) h[i][j] = s[i + j + shift];
        return detExact(h);
    };
    for (int order = 1; order <= size + 1; ++order) {
        Rational det = minor(order, 0);
        if (det.sign() < 0)
            return fail(id, range, "plain minor order " + std::to_string(order),
                        det.toString(), "0");
    }
    for (int order = 1; order <= size; ++order) {
        Rational det = minor(order, 1);
        if (det.sign() < 0)
            return fail(id, range, "shifted minor order " + std::to_string(order),
                        det.toString(), "0");
    }
    return pass(id, range);
}

const std::vector<IdentityEntry>& identityRegistry() {
    static const std::vector<IdentityEntry> registry = {
        {"prop1i", 15, [](int m) { return verifyProp1i(m); }},
        {"prop1ii", 15, [](int m) { return verifyProp1ii(m); }},
        {"ex1a", 20, [](int m) { return verifyEx1a(m); }},
        {"ex1b", 18, [](int m) { return verifyEx1b(m); }},
        {"ex1c", 20, [](int m) { return verifyEx1c(m); }},
        {"ex2a", 20, [](int m) { return verifyEx2a(m); }},
        {"ex2b", 20, [](int m) { return verifyEx2b(m); }},
        {"ex2c", 20, [](int m) { return verifyEx2c(m); }},
        {"fine", 15, [](int n) { return verifyFine(n); }},
    };
    return registry;
}

IdentityReport runIdentity(const std::string& id, int maxParam) {
    for (const auto& entry : identityRegistry())
        if (entry.id == id) return entry.run(maxParam < 0 ? entry.defaultMax : maxParam);
    throw UsageError("unknown identity '" + id + "'");
}

} // namespace kesten
