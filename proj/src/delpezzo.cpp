#include "twistcoh/delpezzo.hpp"

#include "twistcoh/graded_quotient.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace twistcoh {

PicardLattice PicardLattice::make(int r) {
    if (r < 0 || r > 8)
        throw std::invalid_argument("PicardLattice: need 0 <= r <= 8");
    return PicardLattice{r};
}

DivisorClass make_class(const PicardLattice& lat, long long a,
                        std::vector<long long> b) {
    if (static_cast<int>(b.size()) != lat.r)
        throw std::invalid_argument("DivisorClass: coefficient count != r");
    return DivisorClass{a, std::move(b)};
}

long long intersect(const PicardLattice& lat, const DivisorClass& d1,
                    const DivisorClass& d2) {
    if (static_cast<int>(d1.b.size()) != lat.r ||
        static_cast<int>(d2.b.size()) != lat.r)
        throw std::invalid_argument("intersect: class does not fit the lattice");
    long long s = d1.a * d2.a;
    for (int j = 0; j < lat.r; ++j) s -= d1.b[j] * d2.b[j];
    return s;
}

DivisorClass canonical_class(const PicardLattice& lat) {
    return DivisorClass{-3, std::vector<long long>(lat.r, 1)};
}

long long surface_degree(const PicardLattice& lat) {
    DivisorClass k = canonical_class(lat);
    return intersect(lat, k, k);
}

std::vector<DivisorClass> enumerate_lines(const PicardLattice& lat) {
    if (lat.r != 6)
        throw std::invalid_argument("enumerate_lines: needs the six-point blow-up");
    DivisorClass k = canonical_class(lat);
    std::vector<DivisorClass> lines;
    // |a| <= 3, |b_j| <= 3 comfortably covers every solution at r = 6
    std::vector<long long> b(6, -3);
    for (long long a = -3; a <= 3; ++a) {
        std::fill(b.begin(), b.end(), -3);
        while (true) {
            DivisorClass d{a, b};
            if (intersect(lat, d, d) == -1 && intersect(lat, d, k) == -1)
                lines.push_back(d);
            int j = 5;
            while (j >= 0 && b[j] == 3) b[j--] = -3;
            if (j < 0) break;
            ++b[j];
        }
    }
    std::sort(lines.begin(), lines.end(),
              [](const DivisorClass& x, const DivisorClass& y) {
                  return std::tie(x.a, x.b) < std::tie(y.a, y.b);
              });
    return lines;
}

LineFamilies classify_lines(const std::vector<DivisorClass>& lines) {
    LineFamilies f;
    for (const DivisorClass& d : lines) {
        if (d.a == 0) ++f.exceptional;
        else if (d.a == 1) ++f.between_points;
        else if (d.a == 2) ++f.conics;
    }
    return f;
}

bool excluded_by_form(const DivisorClass& d) {
    if (d.a != -4 || d.b.size() != 6) return false;
    int twos = 0, ones = 0;
    for (long long c : d.b) {
        if (c == 2) ++twos;
        else if (c == 1) ++ones;
        else if (c != 0) return false;
    }
    return twos == 4 && ones >= 1;
}

std::vector<DivisorClass> prop63_search(bool apply_form_exclusion) {
    // Working in the sign convention of the elimination itself: the class is
    // -A*E_0 - sum B_j E_j, the degree constraint is 3A + sum B_j = 2, and
    // only A >= 3 is at stake (A = 2 gives degree 6 or 4, never 2).  The
    // per-coefficient bound B_j >= -2 makes the box finite:
    //   sum B = 2 - 3A >= -12  =>  A <= 4,   B_j <= (2 - 3A) + 10.
    std::vector<DivisorClass> survivors;
    for (long long A = 3; A <= 4; ++A) {
        long long target = 2 - 3 * A;
        long long hi = target + 10;
        std::vector<long long> B;
        auto rec = [&](auto&& self, long long lo_prev, long long remaining) -> void {
            if (B.size() == 6) {
                if (remaining != 0) return;
                // endgame: every B_j <= -1 and sum B <= -8
                long long sum = 0;
                for (long long v : B) {
                    if (v > -1) return;
                    sum += v;
                }
                if (sum > -8) return;
                std::vector<long long> cb(6);
                for (int j = 0; j < 6; ++j) cb[j] = -B[j];
                std::sort(cb.begin(), cb.end(), std::greater<long long>());
                survivors.push_back(DivisorClass{-A, std::move(cb)});
                return;
            }
            for (long long v = lo_prev; v <= hi; ++v) {
                long long slots = 6 - static_cast<long long>(B.size()) - 1;
                if (remaining - v > slots * hi) continue;  // cannot reach the sum
                if (remaining - v < slots * (-2)) break;
                B.push_back(v);
                self(self, v, remaining - v);  // non-decreasing: one per multiset
                B.pop_back();
            }
        };
        rec(rec, -2, target);
    }
    if (apply_form_exclusion) {
        survivors.erase(std::remove_if(survivors.begin(), survivors.end(),
                                       excluded_by_form),
                        survivors.end());
    }
    return survivors;
}

ProjectiveOneForm ProjectiveOneForm::make(std::vector<HomogeneousPolynomial> g) {
    if (g.size() != 3)
        throw std::invalid_argument("ProjectiveOneForm: need three components");
    int deg = -1;
    for (const HomogeneousPolynomial& c : g) {
        if (c.is_zero()) continue;
        if (c.num_vars() != 3)
            throw std::invalid_argument("ProjectiveOneForm: components live on the plane");
        if (deg >= 0 && c.degree() != deg)
            throw std::invalid_argument("ProjectiveOneForm: mixed component degrees");
        deg = c.degree();
    }
    if (deg < 0)
        throw std::invalid_argument("ProjectiveOneForm: zero form");
    HomogeneousPolynomial contraction(3, deg + 1);
    for (int i = 0; i < 3; ++i)
        contraction = contraction + HomogeneousPolynomial::variable(3, i) * g[i];
    if (!contraction.is_zero())
        throw std::invalid_argument(
            "ProjectiveOneForm: components do not contract to zero");
    for (HomogeneousPolynomial& c : g)
        if (c.is_zero()) c = HomogeneousPolynomial(3, deg);
    return ProjectiveOneForm{std::move(g), deg + 1};
}

OneFormSpace projective_one_forms(int a) {
    if (a < 0) throw std::invalid_argument("projective_one_forms: need a >= 0");
    OneFormSpace out;
    if (a == 0) return out;
    std::vector<Monomial> target = monomials_of_degree(3, a);
    std::vector<Monomial> gmons = monomials_of_degree(3, a - 1);
    int block = static_cast<int>(gmons.size());
    std::map<Monomial, int> pos;
    for (size_t i = 0; i < target.size(); ++i)
        pos.emplace(target[i], static_cast<int>(i));

    RationalMatrix m(static_cast<int>(target.size()), 3 * block);
    for (int i = 0; i < 3; ++i) {
        Monomial xi = HomogeneousPolynomial::variable(3, i).terms().begin()->first;
        for (int b = 0; b < block; ++b)
            m.at(pos.at(xi * gmons[b]), i * block + b) = Rational(1);
    }
    for (const std::vector<Rational>& x : nullspace(m)) {
        std::vector<HomogeneousPolynomial> g;
        for (int i = 0; i < 3; ++i) {
            std::vector<std::pair<Monomial, Rational>> terms;
            for (int b = 0; b < block; ++b)
                if (!x[static_cast<size_t>(i) * block + b].is_zero())
                    terms.emplace_back(gmons[b], x[static_cast<size_t>(i) * block + b]);
            g.push_back(HomogeneousPolynomial::from_terms(3, a - 1, terms));
        }
        out.basis.push_back(ProjectiveOneForm::make(std::move(g)));
    }
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

ProjectiveOneForm pencil_form() {
    std::vector<HomogeneousPolynomial> g{
        parse_polynomial("-x1", 3),
        parse_polynomial("x0", 3),
        HomogeneousPolynomial(3, 1),
    };
    return ProjectiveOneForm::make(std::move(g));
}

ProjectiveOneForm four_point_form() {
    std::vector<HomogeneousPolynomial> g{
        parse_polynomial("x1^2*x2 - x1*x2^2", 3),
        parse_polynomial("x0*x2^2 - x0^2*x2", 3),
        parse_polynomial("x0^2*x1 - x0*x1^2", 3),
    };
    return ProjectiveOneForm::make(std::move(g));
}

PlanePoint make_point(Rational x0, Rational x1, Rational x2) {
    std::vector<Rational> c{std::move(x0), std::move(x1), std::move(x2)};
    for (const Rational& v : c) {
        if (v.is_zero()) continue;
        Rational scale = Rational(1) / v;
        for (Rational& w : c) w *= scale;
        return PlanePoint{std::move(c)};
    }
    throw std::invalid_argument("make_point: all coordinates zero");
}

long long one_form_zero_degree(int a) {
    return static_cast<long long>(a) * a - 3LL * a + 3LL;
}

ZeroLocusReport zeros_of_form(const ProjectiveOneForm& w) {
    std::vector<HomogeneousPolynomial> comps;
    for (const HomogeneousPolynomial& c : w.g)
        if (!c.is_zero()) comps.push_back(c);
    int e = w.twist - 1;

    // The quotient dimension by the component ideal eventually counts the
    // zero scheme; a still-growing value this far out means a whole curve of
    // zeros (a common factor), which the correspondence does not allow.
    GradedQuotient q(3, comps);
    int k = 4 * e + 4;
    int d0 = q.quotient_dimension(k);
    if (q.quotient_dimension(k + 1) != d0)
        throw std::invalid_argument(
            "zeros_of_form: zero locus has positive dimension");

    ZeroLocusReport rep;
    rep.scheme_degree = d0;

    std::vector<Rational> values;
    {
        std::set<Rational> keys;
        for (int den = 1; den <= 8; ++den)
            for (int num = -8; num <= 8; ++num) {
                Rational v = Rational(num) / Rational(den);
                if (keys.insert(v).second) values.push_back(v);
            }
    }

    auto try_point = [&](const std::vector<Rational>& pt) {
        for (const HomogeneousPolynomial& c : comps)
            if (!c.evaluate(pt).is_zero()) return;
        rep.points.push_back(make_point(pt[0], pt[1], pt[2]));
    };

    for (const Rational& y : values)
        for (const Rational& z : values)
            try_point({Rational(1), y, z});
    for (const Rational& z : values) try_point({Rational(0), Rational(1), z});
    try_point({Rational(0), Rational(0), Rational(1)});

    rep.complete = static_cast<long long>(rep.points.size()) == rep.scheme_degree;
    return rep;
}

}  // namespace twistcoh
