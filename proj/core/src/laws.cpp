#include "fss/laws.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

namespace fss {

namespace {

using Engine = std::mt19937_64;
using SoftOp = FuzzySoftSet (*)(const FuzzySoftSet&, const FuzzySoftSet&);

constexpr std::pair<LawId, std::string_view> kLawNames[] = {
    {LawId::Involution, "involution"},
    {LawId::CommutativeUnion, "commutative-union"},
    {LawId::CommutativeIntersection, "commutative-intersection"},
    {LawId::CommutativeProduct, "commutative-product"},
    {LawId::CommutativeSum, "commutative-sum"},
    {LawId::AssociativeUnion, "associative-union"},
    {LawId::AssociativeIntersection, "associative-intersection"},
    {LawId::AssociativeProduct, "associative-product"},
    {LawId::AssociativeSum, "associative-sum"},
    {LawId::DeMorganIntersection, "de-morgan-intersection"},
    {LawId::DeMorganUnion, "de-morgan-union"},
    {LawId::DistributiveUnionOverIntersection, "distributive-union-over-intersection"},
    {LawId::DistributiveIntersectionOverUnion, "distributive-intersection-over-union"},
    {LawId::IdentityComplementNull, "identity-complement-null"},
    {LawId::IdentityComplementAbsolute, "identity-complement-absolute"},
    {LawId::IdentityIntersectionNull, "identity-intersection-null"},
    {LawId::IdentityUnionNull, "identity-union-null"},
    {LawId::IdentityProductNull, "identity-product-null"},
    {LawId::IdentitySumNull, "identity-sum-null"},
    {LawId::IdentityIntersectionAbsolute, "identity-intersection-absolute"},
    {LawId::IdentityUnionAbsolute, "identity-union-absolute"},
    {LawId::IdentityProductAbsolute, "identity-product-absolute"},
    {LawId::IdentitySumAbsolute, "identity-sum-absolute"},
    {LawId::WeakEquivMinMax, "weak-equivalence-min-max"},
    {LawId::ComplementDuality, "complement-duality"},
    {LawId::MinMaxImplicationUnionMax, "min-max-implication-union-max"},
    {LawId::MinMaxImplicationIntersectionMax, "min-max-implication-intersection-max"},
    {LawId::MinMaxImplicationIntersectionMin, "min-max-implication-intersection-min"},
    {LawId::MinMaxImplicationUnionMin, "min-max-implication-union-min"},
    {LawId::DisjointMinMax, "disjoint-min-max"},
};

constexpr std::pair<ConverseId, std::string_view> kConverseNames[] = {
    {ConverseId::ConverseUnionMax, "converse-union-max"},
    {ConverseId::ConverseUnionMin, "converse-union-min"},
    {ConverseId::ConverseIntersectionMax, "converse-intersection-max"},
    {ConverseId::ConverseIntersectionMin, "converse-intersection-min"},
};

std::string grade_text(const Grade& g) {
    std::ostringstream os;
    os << g;
    return os.str();
}

std::string pair_location(const ParamLabel& a, const ParamLabel& b) {
    return "(" + a.text() + "," + b.text() + ")";
}

// First pointwise difference between two fuzzy sets over the same elements.
std::optional<Witness> image_mismatch(const std::string& location, const FuzzySet& lhs,
                                      const FuzzySet& rhs) {
    if (lhs == rhs) {
        return std::nullopt;
    }
    for (const auto& element : lhs.universe()->elements()) {
        const Grade& l = lhs.grade_for(element);
        const Grade& r = rhs.grade_for(element);
        if (!(l == r)) {
            return Witness{location + " @ " + element, grade_text(l), grade_text(r)};
        }
    }
    return Witness{location, "equal images", "images over different universes"};
}

std::optional<Witness> family_mismatch(const std::string& location, const Family& lhs,
                                       const Family& rhs) {
    for (const auto& m : lhs.members()) {
        if (!rhs.contains(m)) {
            return Witness{location, to_text(m) + " on both sides", "present on the left only"};
        }
    }
    for (const auto& m : rhs.members()) {
        if (!lhs.contains(m)) {
            return Witness{location, to_text(m) + " on both sides", "present on the right only"};
        }
    }
    return std::nullopt;
}

bool degenerate(const FuzzySoftSet& f) {
    return f.is_empty_soft_set() || f.is_null() || f.is_absolute();
}

void require_hypothesis(bool ok, const char* what) {
    if (!ok) {
        throw PreconditionUnmetError(what);
    }
}

LawReport report_of(LawId law, std::optional<Witness> witness) {
    LawReport report;
    report.target = law;
    report.holds = !witness.has_value();
    report.witness = std::move(witness);
    return report;
}

LawReport check_involution(const FuzzySoftSet& f) {
    const FuzzySoftSet back = complement(complement(f));
    for (std::size_t i = 0; i < f.param_count(); ++i) {
        if (auto w = image_mismatch(f.param(i).text(), back.image(i), f.image(i))) {
            return report_of(LawId::Involution, std::move(w));
        }
    }
    if (!are_equal(back, f)) {
        return report_of(LawId::Involution,
                         Witness{"soft set", "equal soft sets", "labels diverged"});
    }
    return report_of(LawId::Involution, std::nullopt);
}

LawReport check_commutative(LawId law, SoftOp op, const FuzzySoftSet& f, const FuzzySoftSet& g) {
    const FuzzySoftSet lhs = op(f, g);
    const FuzzySoftSet rhs = op(g, f);
    for (std::size_t i = 0; i < f.param_count(); ++i) {
        for (std::size_t j = 0; j < g.param_count(); ++j) {
            const std::size_t li = i * g.param_count() + j;
            const std::size_t ri = j * f.param_count() + i;
            if (auto w = image_mismatch(pair_location(f.param(i), g.param(j)), lhs.image(li),
                                        rhs.image(ri))) {
                return report_of(law, std::move(w));
            }
        }
    }
    if (!are_isomorphic(lhs, rhs)) {
        return report_of(law, Witness{"soft set", "isomorphic results", "image multisets differ"});
    }
    return report_of(law, std::nullopt);
}

LawReport check_associative(LawId law, SoftOp op, const FuzzySoftSet& f, const FuzzySoftSet& g,
                            const FuzzySoftSet& h) {
    const FuzzySoftSet lhs = op(op(f, g), h);
    const FuzzySoftSet rhs = op(f, op(g, h));
    for (std::size_t t = 0; t < lhs.param_count(); ++t) {
        if (lhs.param(t).flatten_atoms() != rhs.param(t).flatten_atoms()) {
            return report_of(law, Witness{lhs.param(t).text(), "matching parameter tuples",
                                          rhs.param(t).text()});
        }
        if (auto w = image_mismatch(lhs.param(t).text(), lhs.image(t), rhs.image(t))) {
            return report_of(law, std::move(w));
        }
    }
    return report_of(law, std::nullopt);
}

LawReport check_de_morgan(LawId law, const FuzzySoftSet& f, const FuzzySoftSet& g) {
    const bool over_intersection = law == LawId::DeMorganIntersection;
    const FuzzySoftSet lhs =
        complement(over_intersection ? soft_intersection(f, g) : soft_union(f, g));
    const FuzzySoftSet rhs = over_intersection ? soft_union(complement(f), complement(g))
                                               : soft_intersection(complement(f), complement(g));
    for (std::size_t t = 0; t < lhs.param_count(); ++t) {
        if (auto w = image_mismatch(lhs.param(t).text(), lhs.image(t), rhs.image(t))) {
            return report_of(law, std::move(w));
        }
    }
    return report_of(law, std::nullopt);
}

// Distributivity compares the two sides along the diagonal embedding
// (a,(b,c)) vs ((a,b),(a,c)); off-diagonal entries of the right-hand side
// have no counterpart on the left.
LawReport check_distributive(LawId law, const FuzzySoftSet& f, const FuzzySoftSet& g,
                             const FuzzySoftSet& h) {
    const bool union_outer = law == LawId::DistributiveUnionOverIntersection;
    const SoftOp outer = union_outer ? soft_union : soft_intersection;
    const SoftOp inner = union_outer ? soft_intersection : soft_union;
    const FuzzySoftSet lhs = outer(f, inner(g, h));
    const FuzzySoftSet rhs = inner(outer(f, g), outer(f, h));
    const std::size_t nf = f.param_count();
    const std::size_t ng = g.param_count();
    const std::size_t nh = h.param_count();
    for (std::size_t i = 0; i < nf; ++i) {
        for (std::size_t j = 0; j < ng; ++j) {
            for (std::size_t k = 0; k < nh; ++k) {
                const std::size_t li = i * ng * nh + j * nh + k;
                const std::size_t ri = (i * ng + j) * (nf * nh) + (i * nh + k);
                if (auto w = image_mismatch(lhs.param(li).text(), lhs.image(li), rhs.image(ri))) {
                    return report_of(law, std::move(w));
                }
            }
        }
    }
    return report_of(law, std::nullopt);
}

LawReport check_identity(LawId law, std::span<const FuzzySoftSet> operands) {
    if (law == LawId::IdentityComplementNull) {
        require_hypothesis(operands[0].is_null(), "operand must be a null soft set");
        const FuzzySoftSet result = complement(operands[0]);
        const Family expected({FuzzySet::universal(operands[0].universe())});
        return report_of(law, family_mismatch("tau", tau(result), expected));
    }
    if (law == LawId::IdentityComplementAbsolute) {
        require_hypothesis(operands[0].is_absolute(), "operand must be an absolute soft set");
        const FuzzySoftSet result = complement(operands[0]);
        const Family expected({FuzzySet::empty(operands[0].universe())});
        return report_of(law, family_mismatch("tau", tau(result), expected));
    }

    const FuzzySoftSet& f = operands[0];
    const FuzzySoftSet& z = operands[1];
    require_hypothesis(!degenerate(f),
                       "first operand must not be empty, null or absolute");
    const bool wants_null = law == LawId::IdentityIntersectionNull ||
                            law == LawId::IdentityUnionNull ||
                            law == LawId::IdentityProductNull || law == LawId::IdentitySumNull;
    require_hypothesis(wants_null ? z.is_null() : z.is_absolute(),
                       wants_null ? "second operand must be a null soft set"
                                  : "second operand must be an absolute soft set");

    SoftOp op = nullptr;
    bool result_is_f = false;
    switch (law) {
    case LawId::IdentityIntersectionNull:
        op = soft_intersection;
        result_is_f = false;
        break;
    case LawId::IdentityUnionNull:
        op = soft_union;
        result_is_f = true;
        break;
    case LawId::IdentityProductNull:
        op = soft_product;
        result_is_f = false;
        break;
    case LawId::IdentitySumNull:
        op = soft_sum;
        result_is_f = true;
        break;
    case LawId::IdentityIntersectionAbsolute:
        op = soft_intersection;
        result_is_f = true;
        break;
    case LawId::IdentityUnionAbsolute:
        op = soft_union;
        result_is_f = false;
        break;
    case LawId::IdentityProductAbsolute:
        op = soft_product;
        result_is_f = true;
        break;
    case LawId::IdentitySumAbsolute:
        op = soft_sum;
        result_is_f = false;
        break;
    default:
        throw Error("not an identity law");
    }
    const FuzzySoftSet result = op(f, z);
    const FuzzySoftSet& same_as = result_is_f ? f : z;
    return report_of(law, family_mismatch("tau", tau(result), tau(same_as)));
}

LawReport check_weak_equiv_min_max(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    require_hypothesis(weakly_equivalent(f, g), "operands must be weakly equivalent");
    if (auto w = family_mismatch("min families", min_family(f), min_family(g))) {
        return report_of(LawId::WeakEquivMinMax, std::move(w));
    }
    return report_of(LawId::WeakEquivMinMax,
                     family_mismatch("max families", max_family(f), max_family(g)));
}

LawReport check_complement_duality(const FuzzySoftSet& f) {
    const FuzzySoftSet cf = complement(f);
    const Family max_f = max_family(f);
    const Family min_f = min_family(f);
    const Family max_cf = max_family(cf);
    const Family min_cf = min_family(cf);
    for (std::size_t i = 0; i < f.param_count(); ++i) {
        const FuzzySet& s = f.image(i);
        const FuzzySet c = complement(s);
        if (max_f.contains(s) != min_cf.contains(c)) {
            return report_of(LawId::ComplementDuality,
                             Witness{f.param(i).text(),
                                     "image maximal exactly when its complement is minimal",
                                     to_text(s) + " breaks the correspondence"});
        }
        if (min_f.contains(s) != max_cf.contains(c)) {
            return report_of(LawId::ComplementDuality,
                             Witness{f.param(i).text(),
                                     "image minimal exactly when its complement is maximal",
                                     to_text(s) + " breaks the correspondence"});
        }
    }
    return report_of(LawId::ComplementDuality, std::nullopt);
}

LawReport check_min_max_implication(LawId law, const FuzzySoftSet& f, const FuzzySoftSet& g) {
    require_hypothesis(!degenerate(f) && !degenerate(g),
                       "operands must not be empty, null or absolute");
    const bool via_union =
        law == LawId::MinMaxImplicationUnionMax || law == LawId::MinMaxImplicationUnionMin;
    const bool via_max = law == LawId::MinMaxImplicationUnionMax ||
                         law == LawId::MinMaxImplicationIntersectionMax;
    const FuzzySoftSet r = via_union ? soft_union(f, g) : soft_intersection(f, g);
    const Family fam_r = via_max ? max_family(r) : min_family(r);
    const Family fam_f = via_max ? max_family(f) : min_family(f);
    const Family fam_g = via_max ? max_family(g) : min_family(g);
    for (std::size_t i = 0; i < f.param_count(); ++i) {
        for (std::size_t j = 0; j < g.param_count(); ++j) {
            const std::size_t idx = i * g.param_count() + j;
            if (fam_r.contains(r.image(idx)) && !fam_f.contains(f.image(i)) &&
                !fam_g.contains(g.image(j))) {
                return report_of(
                    law, Witness{pair_location(f.param(i), g.param(j)),
                                 "an extremal combined image needs an extremal operand image",
                                 to_text(r.image(idx)) + " is extremal, neither operand is"});
            }
        }
    }
    return report_of(law, std::nullopt);
}

LawReport check_disjoint_min_max(const FuzzySoftSet& f) {
    require_hypothesis(f.param_count() >= 1, "operand must have parameters");
    for (const auto& image : f.images()) {
        require_hypothesis(!is_empty(image) && !is_universal(image),
                           "images must be neither empty nor universal");
    }
    for (std::size_t i = 0; i < f.param_count(); ++i) {
        for (std::size_t j = i + 1; j < f.param_count(); ++j) {
            require_hypothesis(is_empty(fuzzy_intersection(f.image(i), f.image(j))),
                               "images must be pairwise disjoint");
        }
    }
    const Family t = tau(f);
    const Family mn = min_family(f);
    const Family mx = max_family(f);
    for (const auto& m : t.members()) {
        if (!mn.contains(m)) {
            return report_of(LawId::DisjointMinMax,
                             Witness{"tau", "every image minimal", to_text(m) + " is not"});
        }
        if (!mx.contains(m)) {
            return report_of(LawId::DisjointMinMax,
                             Witness{"tau", "every image maximal", to_text(m) + " is not"});
        }
    }
    return report_of(LawId::DisjointMinMax, std::nullopt);
}

Grade random_grade(Engine& eng, std::uint64_t denominator) {
    return Grade::ratio(eng() % (denominator + 1), denominator);
}

UniversePtr gen_universe(std::size_t n) {
    std::vector<std::string> elements;
    elements.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        elements.push_back("e" + std::to_string(i));
    }
    return Universe::make(std::move(elements));
}

void validate(const GenConfig& cfg) {
    if (cfg.universe_size == 0) {
        throw Error("generator needs a non-empty universe");
    }
    if (cfg.grade_denominator == 0) {
        throw Error("generator needs a positive grade denominator");
    }
}

FuzzySoftSet gen_soft(Engine& eng, const GenConfig& cfg, const std::string& prefix) {
    const UniversePtr universe = gen_universe(cfg.universe_size);
    std::vector<ParamLabel> params;
    std::vector<FuzzySet> images;
    params.reserve(cfg.param_count);
    images.reserve(cfg.param_count);
    for (std::size_t p = 1; p <= cfg.param_count; ++p) {
        params.emplace_back(prefix + std::to_string(p));
        std::vector<Grade> grades;
        grades.reserve(cfg.universe_size);
        for (std::size_t x = 0; x < cfg.universe_size; ++x) {
            grades.push_back(random_grade(eng, cfg.grade_denominator));
        }
        images.emplace_back(universe, std::move(grades));
    }
    return FuzzySoftSet(universe, std::move(params), std::move(images));
}

FuzzySoftSet gen_nondegenerate(Engine& eng, const GenConfig& cfg, const std::string& prefix) {
    require_hypothesis(cfg.param_count >= 1, "law needs at least one parameter");
    for (int attempt = 0; attempt < 256; ++attempt) {
        FuzzySoftSet f = gen_soft(eng, cfg, prefix);
        if (!degenerate(f)) {
            return f;
        }
    }
    throw PreconditionUnmetError("could not draw a non-degenerate soft set");
}

// Fisher-Yates with plain modulo so the sequence is identical across
// standard library implementations.
template <typename T>
void shuffle_vec(std::vector<T>& v, Engine& eng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[eng() % i]);
    }
}

std::pair<FuzzySoftSet, FuzzySoftSet> gen_weak_pair(Engine& eng, const GenConfig& cfg) {
    require_hypothesis(cfg.param_count >= 1, "a weakly equivalent pair needs parameters");
    const FuzzySoftSet f = gen_soft(eng, cfg, "p");
    const std::size_t m = cfg.param_count;
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) {
        order[i] = i;
    }
    shuffle_vec(order, eng);
    const std::size_t extra = m <= 1 ? 0 : eng() % (m + 1);
    for (std::size_t i = 0; i < extra; ++i) {
        order.push_back(eng() % m);
    }
    std::vector<ParamLabel> params;
    std::vector<FuzzySet> images;
    for (std::size_t i = 0; i < order.size(); ++i) {
        params.emplace_back("q" + std::to_string(i + 1));
        images.push_back(f.image(order[i]));
    }
    return {f, FuzzySoftSet(f.universe(), std::move(params), std::move(images))};
}

FuzzySoftSet gen_disjoint(Engine& eng, const GenConfig& cfg) {
    const std::size_t m = cfg.param_count;
    const std::size_t n = cfg.universe_size;
    const std::uint64_t d = cfg.grade_denominator;
    require_hypothesis(m >= 1, "disjointness needs at least one parameter");
    require_hypothesis(m <= n, "disjoint non-empty images need one element each");
    const UniversePtr universe = gen_universe(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
    }
    shuffle_vec(order, eng);
    std::vector<ParamLabel> params;
    std::vector<FuzzySet> images;
    for (std::size_t b = 0; b < m; ++b) {
        params.emplace_back("p" + std::to_string(b + 1));
        std::vector<Grade> grades(n, Grade::zero());
        const std::size_t from = b * n / m;
        const std::size_t to = (b + 1) * n / m;
        for (std::size_t k = from; k < to; ++k) {
            grades[order[k]] = Grade::ratio(1 + eng() % d, d);
        }
        FuzzySet image(universe, std::move(grades));
        if (is_universal(image)) {
            // Only possible when one parameter owns the whole universe.
            require_hypothesis(d >= 2 || n >= 2,
                               "grade range too small for a proper image");
            std::vector<Grade> fixed = image.grades();
            const std::size_t at = order[eng() % n];
            fixed[at] = (d >= 2 && n == 1) ? Grade::ratio(1 + eng() % (d - 1), d) : Grade::zero();
            image = FuzzySet(universe, std::move(fixed));
        }
        images.push_back(std::move(image));
    }
    return FuzzySoftSet(universe, std::move(params), std::move(images));
}

std::vector<FuzzySoftSet> gen_law_operands(LawId law, Engine& eng, const GenConfig& cfg) {
    static const char* kPrefixes[] = {"p", "q", "r"};
    switch (law) {
    case LawId::IdentityComplementNull:
    case LawId::IdentityComplementAbsolute: {
        GenConfig c = cfg;
        c.param_count = std::max<std::size_t>(1, cfg.param_count);
        const UniversePtr universe = gen_universe(c.universe_size);
        std::vector<ParamLabel> params;
        for (std::size_t p = 1; p <= c.param_count; ++p) {
            params.emplace_back("p" + std::to_string(p));
        }
        return {law == LawId::IdentityComplementNull
                    ? FuzzySoftSet::null_set(universe, std::move(params))
                    : FuzzySoftSet::absolute_set(universe, std::move(params))};
    }
    case LawId::IdentityIntersectionNull:
    case LawId::IdentityUnionNull:
    case LawId::IdentityProductNull:
    case LawId::IdentitySumNull:
    case LawId::IdentityIntersectionAbsolute:
    case LawId::IdentityUnionAbsolute:
    case LawId::IdentityProductAbsolute:
    case LawId::IdentitySumAbsolute: {
        FuzzySoftSet f = gen_nondegenerate(eng, cfg, "p");
        std::vector<ParamLabel> params;
        for (std::size_t p = 1; p <= std::max<std::size_t>(1, cfg.param_count); ++p) {
            params.emplace_back("q" + std::to_string(p));
        }
        const bool wants_null =
            law == LawId::IdentityIntersectionNull || law == LawId::IdentityUnionNull ||
            law == LawId::IdentityProductNull || law == LawId::IdentitySumNull;
        FuzzySoftSet z = wants_null
                             ? FuzzySoftSet::null_set(f.universe(), std::move(params))
                             : FuzzySoftSet::absolute_set(f.universe(), std::move(params));
        return {std::move(f), std::move(z)};
    }
    case LawId::WeakEquivMinMax: {
        auto [f, g] = gen_weak_pair(eng, cfg);
        return {std::move(f), std::move(g)};
    }
    case LawId::MinMaxImplicationUnionMax:
    case LawId::MinMaxImplicationIntersectionMax:
    case LawId::MinMaxImplicationIntersectionMin:
    case LawId::MinMaxImplicationUnionMin: {
        FuzzySoftSet f = gen_nondegenerate(eng, cfg, "p");
        FuzzySoftSet g = gen_nondegenerate(eng, cfg, "q");
        return {std::move(f), std::move(g)};
    }
    case LawId::DisjointMinMax:
        return {gen_disjoint(eng, cfg)};
    default: {
        std::vector<FuzzySoftSet> operands;
        for (std::size_t i = 0; i < law_arity(law); ++i) {
            operands.push_back(gen_soft(eng, cfg, kPrefixes[i]));
        }
        return operands;
    }
    }
}

} // namespace

std::string_view law_name(LawId law) {
    for (const auto& [id, name] : kLawNames) {
        if (id == law) {
            return name;
        }
    }
    throw Error("unknown law");
}

std::string_view converse_name(ConverseId converse) {
    for (const auto& [id, name] : kConverseNames) {
        if (id == converse) {
            return name;
        }
    }
    throw Error("unknown converse");
}

std::optional<LawTarget> target_from_name(std::string_view name) {
    for (const auto& [id, n] : kLawNames) {
        if (n == name) {
            return LawTarget{id};
        }
    }
    for (const auto& [id, n] : kConverseNames) {
        if (n == name) {
            return LawTarget{id};
        }
    }
    return std::nullopt;
}

std::span<const LawId> all_laws() {
    static const std::vector<LawId> laws = [] {
        std::vector<LawId> out;
        for (const auto& [id, name] : kLawNames) {
            out.push_back(id);
        }
        return out;
    }();
    return laws;
}

std::span<const ConverseId> all_converses() {
    static const std::vector<ConverseId> converses = [] {
        std::vector<ConverseId> out;
        for (const auto& [id, name] : kConverseNames) {
            out.push_back(id);
        }
        return out;
    }();
    return converses;
}

std::size_t law_arity(LawId law) {
    switch (law) {
    case LawId::Involution:
    case LawId::IdentityComplementNull:
    case LawId::IdentityComplementAbsolute:
    case LawId::ComplementDuality:
    case LawId::DisjointMinMax:
        return 1;
    case LawId::AssociativeUnion:
    case LawId::AssociativeIntersection:
    case LawId::AssociativeProduct:
    case LawId::AssociativeSum:
    case LawId::DistributiveUnionOverIntersection:
    case LawId::DistributiveIntersectionOverUnion:
        return 3;
    default:
        return 2;
    }
}

LawReport check_law(LawId law, std::span<const FuzzySoftSet> operands) {
    if (operands.size() != law_arity(law)) {
        throw ArityMismatchError(std::string(law_name(law)) + " takes " +
                                 std::to_string(law_arity(law)) + " operands, got " +
                                 std::to_string(operands.size()));
    }
    switch (law) {
    case LawId::Involution:
        return check_involution(operands[0]);
    case LawId::CommutativeUnion:
        return check_commutative(law, soft_union, operands[0], operands[1]);
    case LawId::CommutativeIntersection:
        return check_commutative(law, soft_intersection, operands[0], operands[1]);
    case LawId::CommutativeProduct:
        return check_commutative(law, soft_product, operands[0], operands[1]);
    case LawId::CommutativeSum:
        return check_commutative(law, soft_sum, operands[0], operands[1]);
    case LawId::AssociativeUnion:
        return check_associative(law, soft_union, operands[0], operands[1], operands[2]);
    case LawId::AssociativeIntersection:
        return check_associative(law, soft_intersection, operands[0], operands[1], operands[2]);
    case LawId::AssociativeProduct:
        return check_associative(law, soft_product, operands[0], operands[1], operands[2]);
    case LawId::AssociativeSum:
        return check_associative(law, soft_sum, operands[0], operands[1], operands[2]);
    case LawId::DeMorganIntersection:
    case LawId::DeMorganUnion:
        return check_de_morgan(law, operands[0], operands[1]);
    case LawId::DistributiveUnionOverIntersection:
    case LawId::DistributiveIntersectionOverUnion:
        return check_distributive(law, operands[0], operands[1], operands[2]);
    case LawId::WeakEquivMinMax:
        return check_weak_equiv_min_max(operands[0], operands[1]);
    case LawId::ComplementDuality:
        return check_complement_duality(operands[0]);
    case LawId::MinMaxImplicationUnionMax:
    case LawId::MinMaxImplicationIntersectionMax:
    case LawId::MinMaxImplicationIntersectionMin:
    case LawId::MinMaxImplicationUnionMin:
        return check_min_max_implication(law, operands[0], operands[1]);
    case LawId::DisjointMinMax:
        return check_disjoint_min_max(operands[0]);
    default:
        return check_identity(law, operands);
    }
}

LawReport check_converse_minmax(ConverseId which, const FuzzySoftSet& f, const FuzzySoftSet& g) {
    const bool via_union =
        which == ConverseId::ConverseUnionMax || which == ConverseId::ConverseUnionMin;
    const bool via_max =
        which == ConverseId::ConverseUnionMax || which == ConverseId::ConverseIntersectionMax;
    const FuzzySoftSet r = via_union ? soft_union(f, g) : soft_intersection(f, g);
    const Family fam_r = via_max ? max_family(r) : min_family(r);
    const Family fam_f = via_max ? max_family(f) : min_family(f);
    const Family fam_g = via_max ? max_family(g) : min_family(g);
    LawReport report;
    report.target = which;
    for (std::size_t i = 0; i < f.param_count(); ++i) {
        for (std::size_t j = 0; j < g.param_count(); ++j) {
            const std::size_t idx = i * g.param_count() + j;
            if (fam_f.contains(f.image(i)) && fam_g.contains(g.image(j)) &&
                !fam_r.contains(r.image(idx))) {
                report.holds = false;
                report.witness =
                    Witness{pair_location(f.param(i), g.param(j)),
                            "combined image in the result's extremal family",
                            to_text(r.image(idx)) + " is excluded"};
                return report;
            }
        }
    }
    return report;
}

FuzzySoftSet gen_random(const GenConfig& cfg) {
    validate(cfg);
    Engine eng(cfg.seed);
    return gen_soft(eng, cfg, "p");
}

std::pair<FuzzySoftSet, FuzzySoftSet> gen_weakly_equivalent_pair(const GenConfig& cfg) {
    validate(cfg);
    Engine eng(cfg.seed);
    return gen_weak_pair(eng, cfg);
}

std::vector<FuzzySoftSet> gen_operands(const LawTarget& target, const GenConfig& cfg) {
    validate(cfg);
    Engine eng(cfg.seed);
    if (std::holds_alternative<ConverseId>(target)) {
        std::vector<FuzzySoftSet> operands;
        operands.push_back(gen_soft(eng, cfg, "p"));
        operands.push_back(gen_soft(eng, cfg, "q"));
        return operands;
    }
    return gen_law_operands(std::get<LawId>(target), eng, cfg);
}

namespace {

// Runs trial t of a seeded sweep; a nullopt outcome means the precondition
// could not be met for that trial.
std::optional<std::pair<std::vector<FuzzySoftSet>, LawReport>>
run_one_trial(const LawTarget& target, const GenConfig& cfg, std::uint64_t t) {
    GenConfig c = cfg;
    c.seed = cfg.seed + t;
    try {
        std::vector<FuzzySoftSet> operands = gen_operands(target, c);
        LawReport report;
        if (std::holds_alternative<LawId>(target)) {
            report = check_law(std::get<LawId>(target), operands);
        } else {
            report =
                check_converse_minmax(std::get<ConverseId>(target), operands[0], operands[1]);
        }
        return std::make_pair(std::move(operands), std::move(report));
    } catch (const PreconditionUnmetError&) {
        return std::nullopt;
    }
}

} // namespace

std::optional<SearchResult> search_counterexample(const LawTarget& target, const GenConfig& cfg,
                                                  std::uint64_t trials) {
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto outcome = run_one_trial(target, cfg, t);
        if (!outcome) {
            continue;
        }
        if (!outcome->second.holds) {
            return SearchResult{t, std::move(outcome->first), std::move(outcome->second)};
        }
    }
    return std::nullopt;
}

TrialStats run_trials(const LawTarget& target, const GenConfig& cfg, std::uint64_t trials) {
    TrialStats stats;
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto outcome = run_one_trial(target, cfg, t);
        if (!outcome) {
            ++stats.skipped;
            continue;
        }
        ++stats.checked;
        if (!outcome->second.holds) {
            ++stats.violations;
            if (!stats.first_violation) {
                stats.first_violation =
                    SearchResult{t, std::move(outcome->first), std::move(outcome->second)};
            }
        }
    }
    return stats;
}

} // namespace fss
