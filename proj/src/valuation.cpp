#include "atoric/valuation.hpp"

#include <algorithm>

#include "atoric/errors.hpp"

namespace atoric {

bool proportional(std::span<const Integer> u, std::span<const Integer> v) {
    for (std::size_t a = 0; a < u.size(); ++a)
        for (std::size_t b = a + 1; b < u.size(); ++b)
            if (u[a] * v[b] != u[b] * v[a]) return false;
    return true;
}

IntVector infinity_column(std::span<const UPoly> f) {
    IntVector out;
    out.reserve(f.size());
    for (const auto& fi : f) out.emplace_back(fi.is_zero() ? 0 : -fi.degree());
    return out;
}

ValuationMatrix build_valuation(std::span<const UPoly> f, const CoprimeBasis& basis) {
    const std::size_t rows = f.size();

    struct Column {
        IntVector v;
        std::vector<std::size_t> sources;
    };
    // Each root of g_j contributes the same vector, so the deg(g_j) conjugate
    // roots aggregate to deg(g_j) * e_j.
    std::vector<Column> columns;
    for (std::size_t j = 0; j < basis.elements.size(); ++j) {
        IntVector w(rows);
        const long deg = basis.elements[j].degree();
        for (std::size_t i = 0; i < rows; ++i) w[i] = Integer(deg) * basis.exponents[i][j];
        columns.push_back({std::move(w), {j}});
    }

    // Replace any two linearly dependent vectors by their sum until none remain.
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t a = 0; a < columns.size() && !merged; ++a)
            for (std::size_t b = a + 1; b < columns.size() && !merged; ++b) {
                if (!proportional(columns[a].v, columns[b].v)) continue;
                for (std::size_t i = 0; i < rows; ++i) columns[a].v[i] += columns[b].v[i];
                columns[a].sources.insert(columns[a].sources.end(), columns[b].sources.begin(),
                                          columns[b].sources.end());
                columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(b));
                merged = true;
            }
    }
    std::sort(columns.begin(), columns.end(), [](const Column& x, const Column& y) { return x.v > y.v; });

    ValuationMatrix out;
    out.V = IntMatrix(rows, columns.size() + 1);
    IntVector total(rows);
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (std::size_t i = 0; i < rows; ++i) {
            out.V(i, c) = columns[c].v[i];
            total[i] += columns[c].v[i];
        }
        std::sort(columns[c].sources.begin(), columns[c].sources.end());
        out.provenance.push_back(std::move(columns[c].sources));
    }
    const IntVector inf = infinity_column(f);
    for (std::size_t i = 0; i < rows; ++i) {
        if (-total[i] != inf[i]) throw InconsistencyError("valuation multiplicities do not sum to degrees");
        out.V(i, columns.size()) = inf[i];
    }
    return out;
}

}  // namespace atoric
