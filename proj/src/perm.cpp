#include "quasisym/perm.hpp"

#include "quasisym/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace quasisym {

namespace {

void check_degree(int n) {
    if (n < 0 || n > kMaxPoints)
        throw InvalidArgument("permutation degree " + std::to_string(n) + " outside 0.." +
                              std::to_string(kMaxPoints));
}

} // namespace

int CycleType::degree() const {
    int total = 0;
    for (std::size_t k = 0; k < j.size(); ++k) total += static_cast<int>(k + 1) * j[k];
    return total;
}

int CycleType::num_cycles() const { return std::accumulate(j.begin(), j.end(), 0); }

Permutation::Permutation(std::span<const int> image) {
    const int n = static_cast<int>(image.size());
    check_degree(n);
    n_ = static_cast<std::uint8_t>(n);
    std::array<bool, kMaxPoints> hit{};
    for (int i = 0; i < n; ++i) {
        const int x = image[static_cast<std::size_t>(i)];
        if (x < 0 || x >= n || hit[static_cast<std::size_t>(x)])
            throw InvalidArgument("image is not a bijection of {0.." + std::to_string(n - 1) + "}");
        hit[static_cast<std::size_t>(x)] = true;
        img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x);
    }
    for (int i = n; i < kMaxPoints; ++i) img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::identity(int n) {
    check_degree(n);
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < kMaxPoints; ++i) p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return p;
}

std::vector<int> Permutation::image() const {
    return std::vector<int>(img_.begin(), img_.begin() + n_);
}

Mask Permutation::apply(Mask mask) const {
    Mask out = 0;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1u) out |= Mask{1} << img_[static_cast<std::size_t>(i)];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation r = *this;
    for (int i = 0; i < n_; ++i) r.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
    return r;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n_; ++i)
        if (img_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

CycleType Permutation::cycle_type() const {
    CycleType t;
    t.j.assign(n_, 0);
    std::array<bool, kMaxPoints> seen{};
    for (int i = 0; i < n_; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int x = i; !seen[static_cast<std::size_t>(x)]; x = img_[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            ++len;
        }
        ++t.j[static_cast<std::size_t>(len - 1)];
    }
    return t;
}

int Permutation::num_cycles() const {
    std::array<bool, kMaxPoints> seen{};
    int cycles = 0;
    for (int i = 0; i < n_; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ++cycles;
        for (int x = i; !seen[static_cast<std::size_t>(x)]; x = img_[static_cast<std::size_t>(x)])
            seen[static_cast<std::size_t>(x)] = true;
    }
    return cycles;
}

int Permutation::num_fixed_points() const {
    int fixed = 0;
    for (int i = 0; i < n_; ++i) fixed += img_[static_cast<std::size_t>(i)] == i;
    return fixed;
}

std::uint64_t Permutation::key() const {
    std::uint64_t k = 0;
    for (int i = 0; i < kMaxPoints; ++i) k = (k << 4) | img_[static_cast<std::size_t>(i)];
    return k;
}

std::string Permutation::to_cycles() const {
    std::string out;
    std::array<bool, kMaxPoints> seen{};
    for (int i = 0; i < n_; ++i) {
        if (seen[static_cast<std::size_t>(i)] || img_[static_cast<std::size_t>(i)] == i) continue;
        out += '(';
        for (int x = i; !seen[static_cast<std::size_t>(x)]; x = img_[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            if (x != i) out += ' ';
            out += std::to_string(x + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.n_ != q.n_)
        throw InvalidArgument("compose: degrees " + std::to_string(p.n_) + " and " +
                              std::to_string(q.n_) + " differ");
    Permutation r = q;
    for (int i = 0; i < q.n_; ++i)
        r.img_[static_cast<std::size_t>(i)] = p.img_[q.img_[static_cast<std::size_t>(i)]];
    return r;
}

Permutation conjugate(const Permutation& g, const Permutation& h) {
    return compose(compose(g, h), g.inverse());
}

Permutation parse_cycles(std::string_view text, int n) {
    check_degree(n);
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);

    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError("cycle notation '" + std::string(text) + "': " + msg);
    };

    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };

    skip_space();
    while (pos < text.size()) {
        if (text[pos] != '(') throw fail("unexpected token '" + std::string(1, text[pos]) + "'");
        ++pos;
        std::vector<std::string> tokens;
        bool separated = false;
        for (;;) {
            skip_space();
            if (pos >= text.size()) throw fail("missing ')'");
            const char c = text[pos];
            if (c == ')') {
                ++pos;
                break;
            }
            if (c == ',') {
                separated = true;
                ++pos;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw fail("unexpected token '" + std::string(1, c) + "'");
            const std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            tokens.emplace_back(text.substr(start, pos - start));
        }
        if (tokens.size() > 1) separated = true;
        // "(12345)": a single multi-digit run is read digit by digit when every
        // point is a single digit.
        if (!separated && tokens.size() == 1 && tokens[0].size() > 1 && n <= 9) {
            std::vector<std::string> digits;
            for (char c : tokens[0]) digits.emplace_back(1, c);
            tokens = std::move(digits);
        }
        std::vector<int> cycle;
        for (const auto& tok : tokens) {
            if (tok.size() > 3) throw fail("point '" + tok + "' out of range 1.." + std::to_string(n));
            const int point = std::stoi(tok);
            if (point < 1 || point > n)
                throw fail("point '" + tok + "' out of range 1.." + std::to_string(n));
            if (used[static_cast<std::size_t>(point - 1)]) throw fail("repeated point '" + tok + "'");
            used[static_cast<std::size_t>(point - 1)] = true;
            cycle.push_back(point - 1);
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            image[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
        skip_space();
    }
    return Permutation(image);
}

Rational CycleIndex::evaluate_at(const Rational& x) const {
    Rational total = 0;
    for (const auto& [type, coef] : terms) {
        Rational term = coef;
        for (int c = 0; c < type.num_cycles(); ++c) term *= x;
        total += term;
    }
    return total;
}

Rational CycleIndex::d_dx1_at(const Rational& x) const {
    Rational total = 0;
    for (const auto& [type, coef] : terms) {
        const int j1 = type.fixed_points();
        if (j1 == 0) continue;
        Rational term = coef * j1;
        for (int c = 0; c < type.num_cycles() - 1; ++c) term *= x;
        total += term;
    }
    return total;
}

std::string CycleIndex::to_string() const {
    std::ostringstream os;
    bool first = true;
    // Highest number of fixed points first reads like the usual textbook form.
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << quasisym::to_string(it->second);
        for (std::size_t k = 0; k < it->first.j.size(); ++k) {
            const int e = it->first.j[k];
            if (e == 0) continue;
            os << " x" << k + 1;
            if (e > 1) os << '^' << e;
        }
    }
    return os.str();
}

PermGroup PermGroup::generate(int n, std::span<const Permutation> generators) {
    check_degree(n);
    for (const auto& g : generators)
        if (g.degree() != n) throw InvalidArgument("closure: generator degree differs from n");

    PermGroup group;
    group.n_ = n;
    for (const auto& g : generators)
        if (!g.is_identity()) group.generators_.push_back(g);

    std::unordered_set<std::uint64_t> seen;
    std::vector<Permutation> elements{Permutation::identity(n)};
    seen.insert(elements.front().key());
    for (std::size_t head = 0; head < elements.size(); ++head) {
        const Permutation x = elements[head];
        for (const auto& g : group.generators_) {
            Permutation y = compose(g, x);
            if (seen.insert(y.key()).second) elements.push_back(y);
        }
    }
    std::sort(elements.begin(), elements.end());
    group.elements_ = std::move(elements);
    return group;
}

PermGroup PermGroup::from_elements(int n, std::vector<Permutation> elements) {
    check_degree(n);
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

    std::vector<Permutation> gens;
    PermGroup current = generate(n, gens);
    for (const auto& e : elements) {
        if (current.contains(e)) continue;
        gens.push_back(e);
        current = generate(n, gens);
        if (current.order() > elements.size()) break;
    }
    if (current.elements_ != elements)
        throw std::logic_error("from_elements: element list is not a group");
    return current;
}

bool PermGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermGroup::index_of(const Permutation& p) const {
    const auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) return elements_.size();
    return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
    if (n_ != other.n_ || order() > other.order() || other.order() % order() != 0) return false;
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                         elements_.end());
}

PermGroup PermGroup::conjugate_by(const Permutation& s) const {
    std::vector<Permutation> gens;
    gens.reserve(generators_.size());
    for (const auto& g : generators_) gens.push_back(conjugate(s, g));
    return generate(n_, gens);
}

std::string PermGroup::describe() const {
    std::string out = "<";
    for (std::size_t k = 0; k < generators_.size(); ++k) {
        if (k) out += ", ";
        out += generators_[k].to_cycles();
    }
    return out + "> order " + std::to_string(order()) + " on " + std::to_string(n_) + " points";
}

std::vector<std::vector<Mask>> coalition_orbits(const PermGroup& group) {
    const Mask full = (Mask{1} << group.degree()) - 1;
    std::vector<Mask> points(full);
    std::iota(points.begin(), points.end(), Mask{1});
    return orbits<Mask>(group, points, [](const Permutation& g, Mask m) { return g.apply(m); });
}

PermGroup stabilizer(const PermGroup& group, Mask coalition) {
    std::vector<Permutation> kept;
    for (const auto& g : group.elements())
        if (g.apply(coalition) == coalition) kept.push_back(g);
    return PermGroup::from_elements(group.degree(), std::move(kept));
}

CycleIndex cycle_index(const PermGroup& group) {
    if (group.order() == 0) throw InvalidArgument("cycle_index: empty group");
    std::map<CycleType, std::size_t> counts;
    for (const auto& g : group.elements()) ++counts[g.cycle_type()];
    CycleIndex z;
    z.n = group.degree();
    for (const auto& [type, count] : counts) {
        Rational c(static_cast<unsigned long>(count), static_cast<unsigned long>(group.order()));
        c.canonicalize();
        z.terms.emplace(type, c);
    }
    return z;
}

PermGroup trivial_group(int n) { return PermGroup::generate(n, {}); }

namespace {

Permutation cycle_on(int n, const std::vector<int>& points) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    for (std::size_t k = 0; k < points.size(); ++k)
        image[static_cast<std::size_t>(points[k])] = points[(k + 1) % points.size()];
    return Permutation(image);
}

std::vector<int> range_points(int n) {
    std::vector<int> pts(static_cast<std::size_t>(n));
    std::iota(pts.begin(), pts.end(), 0);
    return pts;
}

} // namespace

PermGroup symmetric_group(int n) {
    if (n < 1) throw InvalidArgument("symmetric_group: n must be >= 1");
    std::vector<Permutation> gens;
    if (n >= 2) {
        gens.push_back(cycle_on(n, {0, 1}));
        gens.push_back(cycle_on(n, range_points(n)));
    }
    return PermGroup::generate(n, gens);
}

PermGroup alternating_group(int n) {
    if (n < 1) throw InvalidArgument("alternating_group: n must be >= 1");
    std::vector<Permutation> gens;
    for (int k = 2; k < n; ++k) gens.push_back(cycle_on(n, {0, 1, k}));
    return PermGroup::generate(n, gens);
}

PermGroup cyclic_group(int n) {
    if (n < 1) throw InvalidArgument("cyclic_group: n must be >= 1");
    std::vector<Permutation> gens;
    if (n >= 2) gens.push_back(cycle_on(n, range_points(n)));
    return PermGroup::generate(n, gens);
}

PermGroup caste_group(const std::vector<std::vector<int>>& blocks) {
    int n = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw InvalidArgument("caste_group: empty block");
        n += static_cast<int>(b.size());
    }
    check_degree(n);
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (const auto& b : blocks)
        for (int p : b) {
            if (p < 0 || p >= n || hit[static_cast<std::size_t>(p)])
                throw InvalidArgument("caste_group: blocks do not partition {0.." +
                                      std::to_string(n - 1) + "}");
            hit[static_cast<std::size_t>(p)] = true;
        }
    std::vector<Permutation> gens;
    for (const auto& b : blocks) {
        if (b.size() < 2) continue;
        gens.push_back(cycle_on(n, {b[0], b[1]}));
        if (b.size() > 2) gens.push_back(cycle_on(n, b));
    }
    return PermGroup::generate(n, gens);
}

} // namespace quasisym
