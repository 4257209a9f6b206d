/*
   Copyright 2026 The kzero Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "kzero/count.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "kzero/error.hpp"
#include "kzero/text.hpp"

namespace kzero {

namespace {

// Polynomial compiled to raw field indices for the inner loop.
struct Compiled {
    unsigned nvars;
    std::vector<std::uint64_t> coeffs;
    std::vector<unsigned> exponents;  // coeffs.size() * nvars
};

Compiled compile(const HomogPoly& f) {
    Compiled c{f.nvars(), {}, {}};
    for (const auto& t : f.terms()) {
        c.coeffs.push_back(t.coefficient.index());
        c.exponents.insert(c.exponents.end(), t.exponents.begin(), t.exponents.end());
    }
    return c;
}

bool vanishes(const Field& field, const Compiled& c, const std::vector<std::uint64_t>& point) {
    std::uint64_t sum = 0;
    for (std::size_t t = 0; t < c.coeffs.size(); ++t) {
        std::uint64_t v = c.coeffs[t];
        const unsigned* e = &c.exponents[t * c.nvars];
        for (unsigned i = 0; i < c.nvars && v != 0; ++i) {
            for (unsigned k = 0; k < e[i]; ++k) v = field.mul(v, point[i]);
        }
        sum = field.add(sum, v);
    }
    return sum == 0;
}

struct Prepared {
    Field field;
    std::uint64_t q;
    unsigned nvars;
    std::vector<Compiled> generators;
    std::vector<ChartConstraint> constraints;
    std::uint64_t total;  // number of representatives
};

std::uint64_t checked_pow(std::uint64_t base, unsigned e, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

Prepared prepare(const CountQuery& query, const CountOptions& options) {
    if (!query.field.is_finite()) fail("point counting needs a finite field (got Q)");
    const unsigned nvars = query.ambient + 1;
    for (const auto& g : query.generators) {
        if (!(g.field() == query.field)) fail("generator field mismatch in count query");
        if (g.nvars() != nvars) fail("generator has " + std::to_string(g.nvars()) + " variables, ambient needs " +
                                     std::to_string(nvars));
    }
    for (const auto& c : query.constraints) {
        if (c.variable >= nvars) fail("chart constraint on a variable outside the ambient space");
    }
    const std::uint64_t q = query.field.order();
    if (checked_pow(q, nvars, options.budget) > options.budget) {
        throw Error(ErrorKind::budget, "enumeration of P^" + std::to_string(query.ambient) + " over " +
                                           query.field.to_string() + " exceeds the budget of " +
                                           std::to_string(options.budget) + " evaluations");
    }
    Prepared p{query.field, q, nvars, {}, query.constraints, projective_space_size(q, query.ambient)};
    for (const auto& g : query.generators) {
        if (!g.is_zero()) p.generators.push_back(compile(g));
    }
    return p;
}

// Decodes representative number `index` into a point.
void decode(const Prepared& p, std::uint64_t index, std::vector<std::uint64_t>& point, unsigned& lead) {
    lead = 0;
    unsigned tail = p.nvars - 1;
    std::uint64_t size = checked_pow(p.q, tail, UINT64_MAX - 1);
    while (index >= size) {
        index -= size;
        ++lead;
        --tail;
        size /= p.q;
    }
    std::fill(point.begin(), point.end(), 0);
    point[lead] = 1;
    for (unsigned i = p.nvars; i-- > lead + 1;) {
        point[i] = index % p.q;
        index /= p.q;
    }
}

// Moves to the next representative; returns false past the end.
bool advance(const Prepared& p, std::vector<std::uint64_t>& point, unsigned& lead) {
    for (unsigned i = p.nvars; i-- > lead + 1;) {
        if (++point[i] < p.q) return true;
        point[i] = 0;
    }
    if (lead + 1 >= p.nvars) return false;
    point[lead] = 0;
    ++lead;
    point[lead] = 1;
    return true;
}

bool accepts(const Prepared& p, const std::vector<std::uint64_t>& point) {
    for (const auto& c : p.constraints) {
        const bool zero = point[c.variable] == 0;
        if (zero != (c.kind == Chart::zero)) return false;
    }
    for (const auto& g : p.generators) {
        if (!vanishes(p.field, g, point)) return false;
    }
    return true;
}

std::uint64_t count_range(const Prepared& p, std::uint64_t begin, std::uint64_t end) {
    if (begin >= end) return 0;
    std::vector<std::uint64_t> point(p.nvars);
    unsigned lead = 0;
    decode(p, begin, point, lead);
    std::uint64_t count = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
        if (accepts(p, point)) ++count;
        advance(p, point, lead);
    }
    return count;
}

bool next_tuple(std::vector<int>& v, int h) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] < h) {
            ++v[i];
            return true;
        }
        v[i] = -h;
    }
    return false;
}

}  // namespace

std::uint64_t projective_space_size(std::uint64_t q, unsigned n) {
    std::uint64_t total = 0, power = 1;
    for (unsigned i = 0; i <= n; ++i) {
        total += power;
        power *= q;
    }
    return total;
}

std::string CountQuery::describe() const {
    std::string out = "V(";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out += ", ";
        out += to_string(generators[i]);
    }
    out += ") in P^" + std::to_string(ambient);
    for (const auto& c : constraints) {
        out += ", x" + std::to_string(c.variable) + (c.kind == Chart::zero ? " = 0" : " != 0");
    }
    return out;
}

std::uint64_t count_points(const CountQuery& query, const CountOptions& options) {
    const Prepared p = prepare(query, options);
    unsigned threads = options.threads;
    if (threads == 0) {
        threads = std::clamp(std::thread::hardware_concurrency(), 1U, 8U);
        if (p.total < 20'000) threads = 1;
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(p.total, 1)));
    if (threads <= 1) return count_range(p, 0, p.total);

    // Disjoint index ranges, summed in a fixed order.
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = p.total / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = w + 1 == threads ? p.total : begin + chunk;
        workers.emplace_back([&p, &partial, w, begin, end] { partial[w] = count_range(p, begin, end); });
    }
    for (auto& t : workers) t.join();
    return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

void for_each_point(const CountQuery& query, const std::function<bool(std::span<const Elem>)>& visit,
                    const CountOptions& options) {
    const Prepared p = prepare(query, options);
    std::vector<std::uint64_t> point(p.nvars);
    unsigned lead = 0;
    decode(p, 0, point, lead);
    Vector elems(p.nvars, Elem(p.field));
    for (std::uint64_t i = 0; i < p.total; ++i) {
        if (accepts(p, point)) {
            for (unsigned k = 0; k < p.nvars; ++k) elems[k] = Elem::from_index(p.field, point[k]);
            if (!visit(elems)) return;
        }
        advance(p, point, lead);
    }
}

std::vector<Vector> enumerate_points(const CountQuery& query, const CountOptions& options) {
    std::vector<Vector> out;
    for_each_point(
        query,
        [&](std::span<const Elem> pt) {
            out.emplace_back(pt.begin(), pt.end());
            return true;
        },
        options);
    return out;
}

void for_each_bounded_height_point(Field rationals, unsigned nvars, int height,
                                   const std::function<bool(std::span<const Elem>)>& visit) {
    if (rationals.is_finite()) fail("bounded height search is for Q");
    std::vector<int> v(nvars);
    Vector point(nvars, Elem(rationals));
    for (int h = 1; h <= height; ++h) {
        std::fill(v.begin(), v.end(), -h);
        for (;;) {
            int max_abs = 0, g = 0;
            std::size_t lead = nvars;
            for (std::size_t i = 0; i < nvars; ++i) {
                max_abs = std::max(max_abs, std::abs(v[i]));
                g = std::gcd(g, std::abs(v[i]));
                if (lead == nvars && v[i] != 0) lead = i;
            }
            if (max_abs == h && g == 1 && v[lead] > 0) {
                for (std::size_t i = 0; i < nvars; ++i) {
                    point[i] = Elem::from_rational(rationals, mpq_class(v[i], v[lead]));
                }
                if (!visit(point)) return;
            }
            if (!next_tuple(v, h)) break;
        }
    }
}

}  // namespace kzero
