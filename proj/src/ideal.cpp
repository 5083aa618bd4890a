#include "bdi/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bdi/chains.hpp"
#include "bdi/error.hpp"

namespace bdi {

Monomial Monomial::squarefree(const CellSet& support)
{
    Monomial m;
    for (int idx : support.indices()) m.powers.emplace_back(idx, 1);
    return m;
}

CellSet Monomial::support(int universe) const
{
    CellSet s(universe);
    for (const auto& [cell, e] : powers) {
        if (e < 1) throw PreconditionError("monomial exponents must be positive");
        if (cell < 0 || cell >= universe) throw PreconditionError("monomial variable out of range");
        s.set(cell);
    }
    return s;
}

int block_cell(const Instance& instance, int vertex, int row, int col)
{
    const auto& view = instance.view(vertex);
    return view.side == Side::target ? view.at(row, col) : view.at(col, row);
}

namespace {

/// Block shape (rows, cols) in block-matrix coordinates.
std::pair<int, int> block_shape(const Instance& instance, int vertex)
{
    const auto& vx = instance.vertex(vertex);
    return {vx.a, vx.b};
}

bool next_combination(std::vector<int>& comb, int n)
{
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[static_cast<std::size_t>(i)] < n - (k - 1 - i)) {
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_combination(int k)
{
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 1);
    return c;
}

}  // namespace

MinorStream::MinorStream(const Instance& instance) : instance_(&instance) {}

bool MinorStream::advance_block()
{
    while (++vertex_ < instance_->vertex_count()) {
        auto [a, b] = block_shape(*instance_, vertex_);
        int k = instance_->vertex(vertex_).u + 1;
        if (k <= a && k <= b) {
            rows_ = first_combination(k);
            cols_ = first_combination(k);
            fresh_ = true;
            return true;
        }
    }
    return false;
}

std::optional<MinorSpec> MinorStream::next()
{
    if (vertex_ >= instance_->vertex_count()) return std::nullopt;
    if (vertex_ < 0 && !advance_block()) return std::nullopt;
    if (!fresh_) {
        auto [a, b] = block_shape(*instance_, vertex_);
        if (!next_combination(cols_, b)) {
            cols_ = first_combination(static_cast<int>(cols_.size()));
            if (!next_combination(rows_, a) && !advance_block()) return std::nullopt;
        }
    }
    fresh_ = false;
    MinorSpec spec{vertex_, rows_, cols_, {}};
    for (int r : rows_)
        for (int c : cols_) spec.cells.push_back(block_cell(*instance_, vertex_, r, c));
    return spec;
}

std::optional<Monomial> ChainStream::next()
{
    auto minor = minors_.next();
    if (!minor) return std::nullopt;
    Monomial m;
    for (std::size_t t = 0; t < minor->rows.size(); ++t) m.powers.emplace_back(minor->cell_at(t, t), 1);
    std::sort(m.powers.begin(), m.powers.end());
    return m;
}

BigInt binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

BigInt natural_generator_count(const Instance& instance, int vertex)
{
    auto [a, b] = block_shape(instance, vertex);
    int k = instance.vertex(vertex).u + 1;
    return binomial(a, k) * binomial(b, k);
}

BigInt natural_generator_count(const Instance& instance)
{
    BigInt total = 0;
    for (int g = 0; g < instance.vertex_count(); ++g) total += natural_generator_count(instance, g);
    return total;
}

bool in_initial_ideal_by_generators(const Instance& instance, const Monomial& mono)
{
    return !is_u_compatible(instance, mono.support(instance.cell_count()));
}

bool in_initial_ideal_by_facets(const std::vector<CellSet>& facets, const Monomial& mono, int universe)
{
    CellSet s = mono.support(universe);
    return std::none_of(facets.begin(), facets.end(), [&](const CellSet& f) { return s.is_subset_of(f); });
}

bool in_initial_ideal(const Instance& instance, const std::vector<CellSet>& facets, const Monomial& mono)
{
    bool a = in_initial_ideal_by_generators(instance, mono);
    bool b = in_initial_ideal_by_facets(facets, mono, instance.cell_count());
    if (a != b) throw VerificationFailure("initial-ideal membership routes disagree");
    return a;
}

std::string variable_name(const Cell& c)
{
    return "x_" + std::to_string(c.i) + "_" + std::to_string(c.j) + "_" + std::to_string(c.k);
}

namespace {

int permutation_sign(const std::vector<int>& perm)
{
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

std::string leibniz(const Instance& instance, const MinorSpec& minor)
{
    std::vector<int> perm(minor.rows.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::ostringstream os;
    bool first = true;
    do {
        int sign = permutation_sign(perm);
        if (first)
            os << (sign < 0 ? "-" : "");
        else
            os << (sign < 0 ? " - " : " + ");
        first = false;
        for (std::size_t r = 0; r < perm.size(); ++r) {
            if (r) os << "*";
            os << variable_name(instance.cell(minor.cell_at(r, static_cast<std::size_t>(perm[r]))));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return os.str();
}

std::string m2_matrix(const Instance& instance, const MinorSpec& minor)
{
    std::ostringstream os;
    os << "det matrix{";
    for (std::size_t r = 0; r < minor.rows.size(); ++r) {
        os << (r ? ",{" : "{");
        for (std::size_t c = 0; c < minor.cols.size(); ++c) {
            os << (c ? "," : "") << variable_name(instance.cell(minor.cell_at(r, c)));
        }
        os << "}";
    }
    os << "}";
    return os.str();
}

}  // namespace

std::string export_cas(const Instance& instance, CasFlavor flavor, const ExportOptions& options)
{
    BigInt count = natural_generator_count(instance);
    if (count > options.generator_cap)
        throw ResourceLimit("instance has " + count.str() + " natural generators, above the cap of " +
                            std::to_string(options.generator_cap));

    std::vector<std::string> vars;
    for (int idx = 0; idx < instance.cell_count(); ++idx) vars.push_back(variable_name(instance.cell(idx)));
    std::vector<std::string> gens;
    MinorStream stream(instance);
    while (auto minor = stream.next())
        gens.push_back(flavor == CasFlavor::m2 ? m2_matrix(instance, *minor) : leibniz(instance, *minor));

    const char* comment = flavor == CasFlavor::m2 ? "-- " : "// ";
    std::ostringstream os;
    os << comment << options.version << "\n";
    os << comment << "bipartite determinantal ideal: " << vars.size() << " variables, " << gens.size()
       << " natural generators\n";
    os << comment << "quiver:";
    for (const auto& ar : instance.quiver().arrows) os << " " << ar.from << "->" << ar.to;
    os << "\n" << comment << "m:";
    for (const auto& [id, v] : instance.m()) os << " " << id << "=" << v;
    os << "\n" << comment << "u:";
    for (const auto& [id, v] : instance.u()) os << " " << id << "=" << v;
    os << "\n";
    os << comment << "variables are listed from largest to smallest; the order is pure lex\n";

    auto join = [&](const std::vector<std::string>& items, const std::string& sep) {
        std::string out;
        for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
        return out;
    };

    if (flavor == CasFlavor::m2) {
        os << "R = QQ[" << join(vars, ", ") << ", MonomialOrder => Lex];\n";
        if (gens.empty())
            os << "I = ideal(0_R);\n";
        else
            os << "I = ideal(\n  " << join(gens, ",\n  ") << "\n);\n";
        os << "inI = monomialIdeal leadTerm gens gb I;\n";
        os << "print toString inI;\n";
        os << "print reduceHilbert hilbertSeries I;\n";
    } else {
        os << "ring R = 0, (" << join(vars, ", ") << "), lp;\n";
        if (gens.empty())
            os << "ideal I = 0;\n";
        else
            os << "ideal I =\n  " << join(gens, ",\n  ") << ";\n";
        os << "option(redSB);\n";
        os << "ideal G = std(I);\n";
        os << "ideal inI = lead(G);\n";
        os << "print(inI);\n";
        os << "hilb(G);\n";
    }
    return os.str();
}

}  // namespace bdi
