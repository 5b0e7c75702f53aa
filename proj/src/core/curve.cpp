/*
 * Copyright 2026 The agdec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace agdec {

namespace {

using Series = Vec;

Series series_mul(const Field& f, const Series& a, const Series& b, std::size_t prec)
{
    Series out(prec, 0);
    for (std::size_t i = 0; i < std::min(prec, a.size()); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < prec && j < b.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    return out;
}

std::vector<Series> series_powers(const Field& f, const Series& s, int max_exp, std::size_t prec)
{
    std::vector<Series> out;
    Series one(prec, 0);
    if (prec > 0) one[0] = 1;
    out.push_back(one);
    for (int e = 1; e <= max_exp; ++e) out.push_back(series_mul(f, out.back(), s, prec));
    return out;
}

// E(X, Y) as a truncated series, for X, Y series in the local parameter.
Series equation_series(const CabCurve& c, const Series& x, const Series& y, std::size_t prec)
{
    const Field& f = c.field();
    if (c.is_line()) return y;
    int max_i = 0;
    for (const auto& t : c.terms()) max_i = std::max(max_i, t.i);
    auto xp = series_powers(f, x, max_i, prec);
    auto yp = series_powers(f, y, c.a(), prec);
    Series out = yp[c.a()];
    for (const auto& t : c.terms()) {
        Series m = series_mul(f, xp[t.i], yp[t.j], prec);
        f.axpy(out, m, f.neg(t.coeff));
    }
    return out;
}

}  // namespace

std::shared_ptr<const CabCurve> CabCurve::create(FieldPtr field, int a, int b, std::vector<CurveTerm> terms,
                                                  std::string name)
{
    require(field != nullptr, ErrorKind::invalid_argument, "curve needs a field");
    require(a >= 1 && b >= 1, ErrorKind::invalid_argument, "pole orders must be positive");
    require(std::gcd(a, b) == 1, ErrorKind::invalid_argument, "a and b must be coprime");
    require(a >= 2, ErrorKind::invalid_argument, "a C_{a,b} curve needs a >= 2 (use the line for genus 0)");

    std::sort(terms.begin(), terms.end(),
              [](const CurveTerm& l, const CurveTerm& r) { return l.j != r.j ? l.j < r.j : l.i < r.i; });
    bool leading = false;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& t = terms[k];
        require(field->contains(t.coeff), ErrorKind::invalid_argument, "term coefficient outside the field");
        require(t.i >= 0 && t.j >= 0, ErrorKind::invalid_argument, "negative exponent in curve term");
        if (k > 0 && terms[k - 1].i == t.i && terms[k - 1].j == t.j)
            fail(ErrorKind::invalid_argument, "duplicate curve term x^" + std::to_string(t.i) + " y^" +
                                                  std::to_string(t.j));
        if (t.i == b && t.j == 0) {
            require(t.coeff != 0, ErrorKind::invalid_argument, "leading term x^b must have a nonzero coefficient");
            leading = true;
            continue;
        }
        if (t.j >= a || a * t.i + b * t.j >= a * b)
            fail(ErrorKind::invalid_argument, "illegal monomial x^" + std::to_string(t.i) + " y^" +
                                                  std::to_string(t.j) + " for a C_{a,b} curve");
    }
    require(leading, ErrorKind::invalid_argument, "curve equation is missing the x^b term");
    terms.erase(std::remove_if(terms.begin(), terms.end(), [](const CurveTerm& t) { return t.coeff == 0; }),
                terms.end());

    std::shared_ptr<CabCurve> c(new CabCurve());
    c->field_ = std::move(field);
    c->a_ = a;
    c->b_ = b;
    c->genus_ = (a - 1) * (b - 1) / 2;
    c->name_ = std::move(name);
    c->terms_ = std::move(terms);
    for (int s = 0; s < 2 * c->genus_; ++s)
        if (c->monomial_with_pole_order(s)) c->small_orders_.push_back(s);
    c->enumerate_points();
    return c;
}

std::shared_ptr<const CabCurve> CabCurve::line(FieldPtr field, std::string name)
{
    require(field != nullptr, ErrorKind::invalid_argument, "curve needs a field");
    std::shared_ptr<CabCurve> c(new CabCurve());
    c->field_ = std::move(field);
    c->line_ = true;
    c->name_ = std::move(name);
    c->enumerate_points();
    return c;
}

void CabCurve::enumerate_points()
{
    const Field& f = *field_;
    const elem_t q = f.order();
    if (line_) {
        for (elem_t x = 0; x < q; ++x) points_.push_back({x, 0, points_.size()});
        return;
    }
    for (elem_t x = 0; x < q; ++x) {
        for (elem_t y = 0; y < q; ++y) {
            if (equation_at(x, y) != 0) continue;
            if (dx_at(x, y) == 0 && dy_at(x, y) == 0)
                fail(ErrorKind::invalid_argument,
                     "curve is singular at (" + f.format(x) + ", " + f.format(y) + ")");
            points_.push_back({x, y, points_.size()});
        }
    }
}

std::optional<Monomial> CabCurve::monomial_with_pole_order(int s) const noexcept
{
    if (s < 0) return std::nullopt;
    if (line_) return Monomial{s, 0};
    // j = s * b^{-1} mod a is the only candidate with 0 <= j < a.
    int binv = 1;
    while ((b_ * binv) % a_ != 1 % a_) ++binv;
    const int j = (s % a_) * binv % a_;
    const int rest = s - b_ * j;
    if (rest < 0) return std::nullopt;
    return Monomial{rest / a_, j};
}

std::size_t CabCurve::basis_size(int bound) const noexcept
{
    if (bound < 0) return 0;
    if (bound >= 2 * genus_) return static_cast<std::size_t>(bound - genus_ + 1);
    return static_cast<std::size_t>(
        std::upper_bound(small_orders_.begin(), small_orders_.end(), bound) - small_orders_.begin());
}

Monomial CabCurve::monomial(std::size_t index) const
{
    const int s = index < small_orders_.size() ? small_orders_[index] : static_cast<int>(index) + genus_;
    auto m = monomial_with_pole_order(s);
    require(m.has_value(), ErrorKind::internal, "semigroup indexing inconsistent");
    return *m;
}

std::vector<Monomial> CabCurve::monomial_basis(int bound) const
{
    std::vector<Monomial> out;
    const std::size_t n = basis_size(bound);
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(monomial(k));
    return out;
}

elem_t CabCurve::equation_at(elem_t x, elem_t y) const noexcept
{
    const Field& f = *field_;
    if (line_) return y;
    elem_t v = f.pow(y, static_cast<std::uint64_t>(a_));
    for (const auto& t : terms_)
        v = f.sub(v, f.mul(t.coeff, f.mul(f.pow(x, t.i), f.pow(y, t.j))));
    return v;
}

elem_t CabCurve::dx_at(elem_t x, elem_t y) const noexcept
{
    const Field& f = *field_;
    if (line_) return 0;
    elem_t v = 0;
    for (const auto& t : terms_) {
        if (t.i == 0) continue;
        const elem_t c = f.mul(f.from_int(t.i), t.coeff);
        v = f.sub(v, f.mul(c, f.mul(f.pow(x, t.i - 1), f.pow(y, t.j))));
    }
    return v;
}

elem_t CabCurve::dy_at(elem_t x, elem_t y) const noexcept
{
    const Field& f = *field_;
    if (line_) return 1;
    elem_t v = f.mul(f.from_int(a_), f.pow(y, a_ - 1));
    for (const auto& t : terms_) {
        if (t.j == 0) continue;
        const elem_t c = f.mul(f.from_int(t.j), t.coeff);
        v = f.sub(v, f.mul(c, f.mul(f.pow(x, t.i), f.pow(y, t.j - 1))));
    }
    return v;
}

std::string CabCurve::to_text() const
{
    const Field& f = *field_;
    std::ostringstream os;
    if (!name_.empty()) os << "name " << name_ << '\n';
    os << "field " << f.characteristic() << ' ' << f.degree() << '\n';
    if (line_) {
        os << "line\n";
        return os.str();
    }
    os << "cab " << a_ << ' ' << b_ << '\n';
    for (const auto& t : terms_) os << "term " << t.i << ' ' << t.j << ' ' << f.format(t.coeff) << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------

CurveFn::CurveFn(CurvePtr curve, Vec coeffs) : curve_(std::move(curve)), coeffs_(std::move(coeffs))
{
    require(curve_ != nullptr, ErrorKind::invalid_argument, "function needs a curve");
    trim();
}

CurveFn CurveFn::constant(CurvePtr curve, elem_t c) { return CurveFn(std::move(curve), Vec{c}); }

CurveFn CurveFn::monomial(CurvePtr curve, Monomial m, elem_t c)
{
    require(m.i >= 0 && m.j >= 0 && m.j < curve->a(), ErrorKind::invalid_argument, "monomial not in normal form");
    require(!curve->is_line() || m.j == 0, ErrorKind::invalid_argument, "the line has no y-variable");
    const std::size_t idx = curve->basis_size(curve->pole_order(m)) - 1;
    Vec v(idx + 1, 0);
    v[idx] = c;
    return CurveFn(std::move(curve), std::move(v));
}

void CurveFn::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int CurveFn::pole_order() const noexcept
{
    if (coeffs_.empty()) return -1;
    return curve_->pole_order(curve_->monomial(coeffs_.size() - 1));
}

Vec CurveFn::coordinates(std::size_t n) const
{
    require(coeffs_.size() <= n, ErrorKind::dimension, "function does not fit the requested coordinates");
    Vec v = coeffs_;
    v.resize(n, 0);
    return v;
}

CurveFn CurveFn::operator+(const CurveFn& o) const
{
    require(curve_ == o.curve_, ErrorKind::invalid_argument, "functions on different curves");
    Vec v = coeffs_;
    if (v.size() < o.coeffs_.size()) v.resize(o.coeffs_.size(), 0);
    curve_->field().axpy(std::span<elem_t>(v.data(), o.coeffs_.size()), o.coeffs_, 1);
    return CurveFn(curve_, std::move(v));
}

CurveFn CurveFn::operator-(const CurveFn& o) const { return *this + o.scaled(curve_->field().neg(1)); }

CurveFn CurveFn::operator*(const CurveFn& o) const { return fn_mul(*this, o); }

CurveFn CurveFn::scaled(elem_t c) const
{
    Vec v = coeffs_;
    curve_->field().scale(v, c);
    return CurveFn(curve_, std::move(v));
}

CurveFn fn_mul(const CurveFn& f, const CurveFn& g)
{
    require(f.curve() == g.curve(), ErrorKind::invalid_argument, "functions on different curves");
    const CurvePtr& curve = f.curve();
    if (f.is_zero() || g.is_zero()) return CurveFn::zero(curve);
    const Field& fld = curve->field();
    const int a = curve->a();
    const int total = f.pole_order() + g.pole_order();
    const int width = total / a + 1;
    const int height = curve->is_line() ? 1 : 2 * a - 1;
    std::vector<elem_t> grid(static_cast<std::size_t>(width) * height, 0);
    auto at = [&](int i, int j) -> elem_t& { return grid[static_cast<std::size_t>(j) * width + i]; };

    for (std::size_t u = 0; u < f.coeffs().size(); ++u) {
        const elem_t cu = f.coeffs()[u];
        if (cu == 0) continue;
        const Monomial mu = curve->monomial(u);
        for (std::size_t v = 0; v < g.coeffs().size(); ++v) {
            const elem_t cv = g.coeffs()[v];
            if (cv == 0) continue;
            const Monomial mv = curve->monomial(v);
            elem_t& cell = at(mu.i + mv.i, mu.j + mv.j);
            cell = fld.add(cell, fld.mul(cu, cv));
        }
    }
    // y^a -> sum c x^i y^j, top row first; every new term lands in a lower row.
    for (int j = height - 1; j >= a; --j) {
        for (int i = 0; i < width; ++i) {
            const elem_t c = at(i, j);
            if (c == 0) continue;
            at(i, j) = 0;
            for (const auto& t : curve->terms()) {
                elem_t& cell = at(i + t.i, j - a + t.j);
                cell = fld.add(cell, fld.mul(c, t.coeff));
            }
        }
    }
    Vec out(curve->basis_size(total), 0);
    for (int j = 0; j < std::min(a, height); ++j) {
        for (int i = 0; i < width; ++i) {
            const elem_t c = at(i, j);
            if (c == 0) continue;
            out[curve->basis_size(curve->pole_order({i, j})) - 1] = c;
        }
    }
    return CurveFn(curve, std::move(out));
}

elem_t evaluate(const CurveFn& f, const AffinePoint& p)
{
    const CabCurve& c = *f.curve();
    const Field& fld = c.field();
    elem_t v = 0;
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        if (f.coeffs()[k] == 0) continue;
        const Monomial m = c.monomial(k);
        v = fld.add(v, fld.mul(f.coeffs()[k], fld.mul(fld.pow(p.x, m.i), fld.pow(p.y, m.j))));
    }
    return v;
}

Matrix monomial_expansions(const CabCurve& curve, const AffinePoint& p, std::size_t count, std::size_t prec)
{
    const Field& f = curve.field();
    require(curve.equation_at(p.x, p.y) == 0, ErrorKind::invalid_argument, "point is not on the curve");
    Matrix out(prec, count);
    if (prec == 0 || count == 0) return out;

    const elem_t ey = curve.dy_at(p.x, p.y);
    const elem_t ex = curve.dx_at(p.x, p.y);
    require(ey != 0 || ex != 0, ErrorKind::invalid_argument, "singular point");
    const bool x_param = ey != 0;

    Series x(prec, 0), y(prec, 0);
    x[0] = p.x;
    y[0] = p.y;
    Series& known = x_param ? x : y;
    Series& dependent = x_param ? y : x;
    if (prec > 1) known[1] = 1;
    if (!curve.is_line()) {
        // Linear Hensel lifting: the t^r coefficient of E is affine in the
        // unknown r-th coefficient with slope dE/d(dependent) at p.
        const elem_t slope_inv = f.inv(x_param ? ey : ex);
        for (std::size_t r = 1; r < prec; ++r) {
            const Series e = equation_series(curve, x, y, r + 1);
            dependent[r] = f.neg(f.mul(e[r], slope_inv));
        }
    }

    int max_i = 0;
    for (std::size_t k = 0; k < count; ++k) max_i = std::max(max_i, curve.monomial(k).i);
    const auto xp = series_powers(f, x, max_i, prec);
    const auto yp = series_powers(f, y, curve.is_line() ? 0 : curve.a() - 1, prec);
    for (std::size_t k = 0; k < count; ++k) {
        const Monomial m = curve.monomial(k);
        const Series s = m.j == 0 ? xp[m.i] : series_mul(f, xp[m.i], yp[m.j], prec);
        for (std::size_t r = 0; r < prec; ++r) out(r, k) = s[r];
    }
    return out;
}

Vec local_expansion(const CurveFn& fn, const AffinePoint& p, std::size_t prec)
{
    const Matrix e = monomial_expansions(*fn.curve(), p, fn.coeffs().size(), prec);
    return multiply(fn.curve()->field(), e, fn.coeffs());
}

// ---------------------------------------------------------------------------

namespace {

long long parse_integer(const std::string& tok, const std::string& line)
{
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(ErrorKind::parse, "expected an integer in line '" + line + "'");
    }
}

}  // namespace

CurveSpec parse_curve_spec(const std::string& text)
{
    std::istringstream in(text);
    std::string raw;
    std::string name;
    FieldPtr field;
    std::optional<std::pair<int, int>> ab;
    bool is_line = false;
    struct RawTerm {
        int i, j;
        std::string coeff;
        std::string line;
    };
    std::vector<RawTerm> raw_terms;
    CurveSpec spec;

    while (std::getline(in, raw)) {
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;) tok.push_back(w);
        if (tok.empty()) continue;
        const std::string& key = tok[0];
        auto want = [&](std::size_t n) {
            if (tok.size() != n) fail(ErrorKind::parse, "wrong number of fields in line '" + line + "'");
        };
        if (key == "name") {
            want(2);
            name = tok[1];
        } else if (key == "field") {
            want(3);
            const long long p = parse_integer(tok[1], line), k = parse_integer(tok[2], line);
            if (p < 2 || k < 1 || p > 1 << 20 || k > 20) fail(ErrorKind::parse, "bad field in line '" + line + "'");
            field = Field::create(static_cast<unsigned>(p), static_cast<unsigned>(k));
        } else if (key == "cab") {
            want(3);
            ab = {static_cast<int>(parse_integer(tok[1], line)), static_cast<int>(parse_integer(tok[2], line))};
        } else if (key == "line") {
            want(1);
            is_line = true;
        } else if (key == "term") {
            want(4);
            raw_terms.push_back({static_cast<int>(parse_integer(tok[1], line)),
                                 static_cast<int>(parse_integer(tok[2], line)), tok[3], line});
        } else if (key == "degG") {
            want(2);
            spec.degG = static_cast<int>(parse_integer(tok[1], line));
        } else if (key == "points") {
            want(2);
            const long long n = parse_integer(tok[1], line);
            if (n < 1) fail(ErrorKind::parse, "points must be positive");
            spec.npoints = static_cast<std::size_t>(n);
        } else {
            fail(ErrorKind::parse, "unknown curve key '" + key + "'");
        }
    }
    if (!field) fail(ErrorKind::parse, "curve description lacks a 'field' line");
    if (is_line == ab.has_value()) fail(ErrorKind::parse, "curve description needs exactly one of 'cab' or 'line'");
    if (is_line) {
        if (!raw_terms.empty()) fail(ErrorKind::parse, "the line takes no terms");
        spec.curve = CabCurve::line(field, name);
        return spec;
    }
    std::vector<CurveTerm> terms;
    for (const auto& t : raw_terms) terms.push_back({t.i, t.j, field->parse(t.coeff)});
    spec.curve = CabCurve::create(field, ab->first, ab->second, std::move(terms), name);
    return spec;
}

}  // namespace agdec
