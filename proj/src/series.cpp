#include "bdi/series.hpp"

#include <sstream>

#include "bdi/error.hpp"
#include "bdi/vertex_map.hpp"

namespace bdi {

Polynomial trimmed(Polynomial p)
{
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    if (p.empty()) p.push_back(0);
    return p;
}

namespace {

Polynomial multiply(const Polynomial& a, const Polynomial& b)
{
    Polynomial out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Polynomial power(const Polynomial& base, int e)
{
    Polynomial out{1};
    for (int i = 0; i < e; ++i) out = multiply(out, base);
    return out;
}

void add_into(Polynomial& acc, const Polynomial& p, const BigInt& scale)
{
    if (acc.size() < p.size()) acc.resize(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) acc[i] += scale * p[i];
}

Polynomial histogram(const std::vector<int>& values)
{
    Polynomial out{0};
    for (int v : values) {
        if (out.size() <= static_cast<std::size_t>(v)) out.resize(static_cast<std::size_t>(v) + 1, 0);
        out[static_cast<std::size_t>(v)] += 1;
    }
    return trimmed(out);
}

std::string show(const Polynomial& p)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << "]";
    return os.str();
}

}  // namespace

std::string to_string(const BigInt& value) { return value.str(); }

Polynomial h_from_se_corners(const Instance& instance, const std::vector<CellSet>& facets)
{
    std::vector<int> counts;
    for (const auto& f : facets) counts.push_back(corners(instance, f).essential_se);
    return histogram(counts);
}

Polynomial h_from_nw_corners(const Instance& instance, const std::vector<CellSet>& facets)
{
    std::vector<int> counts;
    for (const auto& f : facets) counts.push_back(essential_nw_cells(instance, f).count());
    return histogram(counts);
}

Polynomial h_from_faces(const Instance& instance, const FaceTable& table)
{
    const int n = instance.facet_size();
    Polynomial acc{0};
    for (std::size_t c = 0; c < table.faces.size(); ++c) {
        if (table.faces[c] == 0) continue;
        Polynomial term(c + 1, 0);
        term[c] = 1;
        term = multiply(term, power({1, -1}, n - static_cast<int>(c)));
        add_into(acc, term, BigInt(table.faces[c]));
    }
    return trimmed(acc);
}

Polynomial h_from_interior(const Instance& instance, const FaceTable& table)
{
    if (table.interior.empty()) throw PreconditionError("interior counts have not been computed");
    const int n = instance.facet_size();
    Polynomial acc{0};
    for (std::size_t c = 0; c < table.interior.size(); ++c) {
        if (table.interior[c] == 0) continue;
        add_into(acc, power({-1, 1}, n - static_cast<int>(c)), BigInt(table.interior[c]));
    }
    return trimmed(acc);
}

Polynomial h_polynomial(const Instance& instance, const std::vector<CellSet>* facets, const FaceTable* table)
{
    std::vector<std::pair<const char*, Polynomial>> routes;
    if (facets) {
        routes.emplace_back("essential SE corners", h_from_se_corners(instance, *facets));
        routes.emplace_back("essential NW corners", h_from_nw_corners(instance, *facets));
    }
    if (table) {
        routes.emplace_back("face counts", h_from_faces(instance, *table));
        if (!table->interior.empty()) routes.emplace_back("interior faces", h_from_interior(instance, *table));
    }
    if (routes.empty()) throw PreconditionError("h-polynomial needs facets or a face table");
    for (const auto& [name, poly] : routes) {
        if (poly != routes.front().second) {
            throw VerificationFailure(std::string("h-polynomial routes disagree: ") + routes.front().first + " gives " +
                                      show(routes.front().second) + ", " + name + " gives " + show(poly));
        }
    }
    return routes.front().second;
}

BigInt HilbertSeries::multiplicity() const
{
    BigInt sum = 0;
    for (const auto& c : numerator) sum += c;
    return sum;
}

bool HilbertSeries::palindromic() const { return gorenstein_hint(numerator); }

std::string HilbertSeries::render() const
{
    std::ostringstream num;
    int terms = 0;
    for (std::size_t i = 0; i < numerator.size(); ++i) {
        const BigInt& c = numerator[i];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (terms > 0 || c < 0) num << (c < 0 ? "-" : "+");
        if (i == 0 || mag != 1) num << mag;
        if (i >= 1) num << "t";
        if (i >= 2) num << "^" << i;
        ++terms;
    }
    if (terms == 0) num << "0";
    std::string top = terms > 1 ? "(" + num.str() + ")" : num.str();
    std::string bottom = denominator_exponent == 1 ? "(1-t)" : "(1-t)^" + std::to_string(denominator_exponent);
    if (denominator_exponent == 0) return top;
    return top + "/" + bottom;
}

HilbertSeries hilbert_series(const Instance& instance, const Polynomial& h)
{
    return {trimmed(h), instance.facet_size()};
}

HilbertSeries hilbert_series_checked(const Instance& instance, const Polynomial& h, const FaceTable& table)
{
    auto other = h_from_interior(instance, table);
    if (other != trimmed(h))
        throw VerificationFailure("Hilbert numerator from interior faces " + show(other) + " differs from " + show(h));
    return hilbert_series(instance, h);
}

BigInt multiplicity(const std::vector<CellSet>& facets, const Polynomial& h)
{
    BigInt count = facets.size();
    BigInt at_one = 0;
    for (const auto& c : h) at_one += c;
    if (count != at_one)
        throw VerificationFailure("facet count " + count.str() + " differs from H(1) = " + at_one.str());
    return count;
}

bool gorenstein_hint(const Polynomial& h)
{
    auto p = trimmed(h);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != p[p.size() - 1 - i]) return false;
    return true;
}

}  // namespace bdi
