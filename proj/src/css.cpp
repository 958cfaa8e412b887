// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsync/css.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "qsync/error.hpp"
#include "qsync/gf2_span.hpp"

namespace qsync {

namespace {

void add_x(PauliGroupSpan &group, const LinearCode &code) {
    for (const auto &v : code.generators()) {
        group.add(PauliOperator::x_type(v));
    }
}

void add_z(PauliGroupSpan &group, const LinearCode &code) {
    for (const auto &v : code.generators()) {
        group.add(PauliOperator::z_type(v));
    }
}

PauliGroupSpan css_group(const LinearCode &x_part, const LinearCode &z_part) {
    PauliGroupSpan group(x_part.length());
    add_x(group, x_part);
    add_z(group, z_part);
    return group;
}

void require_subcode(const LinearCode &small, const LinearCode &big, const std::string &what) {
    require(small.is_subcode_of(big), ErrorCode::kContainmentViolation, what + " does not hold");
}

void require_same_length(const std::vector<const LinearCode *> &codes) {
    for (const auto *c : codes) {
        require(c->length() == codes.front()->length(), ErrorCode::kLengthMismatch,
                "classical codes of different lengths");
    }
}

std::optional<int> distance_part(const LinearCode &a, const LinearCode &b, const CssOptions &options) {
    if (!options.compute_distance) {
        return std::nullopt;
    }
    return min_weight_outside_bounded(a.span(), b.span());
}

void finish_distance(CssParameters &p) {
    if (p.d_x && p.d_z) {
        p.d = std::min(*p.d_x, *p.d_z);
    }
}

int translation_phase_rank(const CssCodeInstance &inst) {
    const auto &stabs = inst.inner_stabilizer.independent_generators();
    Gf2Span patterns(static_cast<int>(stabs.size()));
    auto record = [&](const PauliOperator &t) {
        BitVector row(static_cast<int>(stabs.size()));
        for (size_t i = 0; i < stabs.size(); ++i) {
            row.set(static_cast<int>(i), symplectic_product(t, stabs[i]));
        }
        patterns.insert(row);
    };
    for (const auto &t : inst.translations_x) {
        record(t);
    }
    for (const auto &t : inst.translations_z) {
        record(t);
    }
    return patterns.rank();
}

void attach_translations(CssCodeInstance &inst) {
    for (const auto &v : coset_representatives(*inst.input.d_x, inst.input.c_x)) {
        inst.translations_x.push_back(PauliOperator::x_type(v));
    }
    for (const auto &v : coset_representatives(*inst.input.d_z, inst.input.c_z)) {
        inst.translations_z.push_back(PauliOperator::z_type(v));
    }
    inst.phase_rank = translation_phase_rank(inst);
    inst.classical_degenerate = inst.phase_rank != inst.params.m;
}

void fill_subsystem_ranks(CssCodeInstance &inst) {
    const auto &cx = inst.input.c_x;
    const auto &cz = inst.input.c_z;
    const int n = cx.length();
    inst.r_x = code_sum(cx, cz.dual()).dimension();
    inst.r_z = code_sum(cz, cx.dual()).dimension();
    const int k_a = inst.r_x + cz.dimension() - n;
    const int k_b = inst.r_z + cx.dimension() - n;
    const int r_a = inst.r_x - cx.dimension();
    const int r_b = inst.r_z - cz.dimension();
    require(k_a == k_b && r_a == r_b, ErrorCode::kConstructionInconsistency,
            "k or r formulas disagree: k " + std::to_string(k_a) + " vs " + std::to_string(k_b) + ", r " +
                std::to_string(r_a) + " vs " + std::to_string(r_b));
    inst.params.k = k_a;
    inst.params.r = r_a;
}

std::string optional_text(const std::optional<int> &v) {
    if (!v) {
        return "-";
    }
    return *v == kInfiniteWeight ? "inf" : std::to_string(*v);
}

/// Gray-code sweep over a coset offset + span(rows) of symplectic rows, returning the least Pauli weight.
int min_pauli_weight_in_coset(const BitVector &offset, const std::vector<BitVector> &rows, int num_qubits) {
    auto weight = [num_qubits](const BitVector &row) {
        return (row.slice(0, num_qubits) | row.slice(num_qubits, num_qubits)).weight();
    };
    BitVector current = offset;
    int best = weight(current);
    const uint64_t count = uint64_t{1} << rows.size();
    for (uint64_t i = 1; i < count && best > 0; ++i) {
        current ^= rows[static_cast<size_t>(std::countr_zero(i))];
        best = std::min(best, weight(current));
    }
    return best;
}

CheckResult make_check(std::string name, bool passed, std::string detail = {}) {
    return CheckResult{std::move(name), passed, std::move(detail)};
}

}  // namespace

std::string css_kind_name(CssKind kind) {
    switch (kind) {
        case CssKind::kStabilizer:
            return "stabilizer";
        case CssKind::kSubsystem:
            return "subsystem";
        case CssKind::kHybrid:
            return "hybrid";
        case CssKind::kHybridSubsystem:
            return "hybrid-subsystem";
    }
    return "unknown";
}

std::vector<BitVector> coset_representatives(const LinearCode &super, const LinearCode &sub) {
    require_subcode(sub, super, "subcode containment for coset representatives");
    Gf2Span grown = sub.span();
    std::vector<BitVector> reps;
    for (const auto &v : super.generators()) {
        BitVector reduced = sub.span().reduce(v);
        if (grown.insert(reduced)) {
            reps.push_back(reduced);
        }
    }
    return reps;
}

CssCodeInstance css_code(const LinearCode &c_x, const LinearCode &c_z, const CssOptions &options) {
    require_same_length({&c_x, &c_z});
    require_subcode(c_z.dual(), c_x, "C_z^perp inside C_x");
    CssCodeInstance inst;
    inst.kind = CssKind::kStabilizer;
    inst.input = CssInput{c_x, c_z, c_x, c_z};
    const int n = c_x.length();
    inst.r_x = c_x.dimension();
    inst.r_z = c_z.dimension();
    inst.inner_stabilizer = css_group(c_z.dual(), c_x.dual());
    inst.outer_stabilizer = inst.inner_stabilizer;
    inst.inner_gauge = inst.inner_stabilizer;
    inst.outer_gauge = inst.inner_stabilizer;
    inst.params.n = n;
    inst.params.k = c_x.dimension() + c_z.dimension() - n;
    inst.params.d_x = distance_part(c_x, c_z.dual(), options);
    inst.params.d_z = distance_part(c_z, c_x.dual(), options);
    finish_distance(inst.params);
    return inst;
}

CssCodeInstance css_subsystem(const LinearCode &c_x, const LinearCode &c_z, const CssOptions &options) {
    require_same_length({&c_x, &c_z});
    CssCodeInstance inst;
    inst.kind = CssKind::kSubsystem;
    inst.input = CssInput{c_x, c_z, c_x, c_z};
    inst.params.n = c_x.length();
    fill_subsystem_ranks(inst);
    inst.inner_gauge = css_group(c_z.dual(), c_x.dual());
    inst.outer_gauge = inst.inner_gauge;
    inst.inner_stabilizer = css_group(code_intersection(c_x, c_z.dual()), code_intersection(c_z, c_x.dual()));
    inst.outer_stabilizer = inst.inner_stabilizer;
    inst.params.d_x = distance_part(code_sum(c_x, c_z.dual()), c_z.dual(), options);
    inst.params.d_z = distance_part(code_sum(c_z, c_x.dual()), c_x.dual(), options);
    finish_distance(inst.params);
    return inst;
}

CssCodeInstance css_hybrid(const LinearCode &c_x, const LinearCode &c_z, const LinearCode &d_x, const LinearCode &d_z,
                           const CssOptions &options) {
    require_same_length({&c_x, &c_z, &d_x, &d_z});
    require_subcode(c_z.dual(), c_x, "C_z^perp inside C_x");
    require_subcode(c_x, d_x, "C_x inside D_x");
    require_subcode(c_z, d_z, "C_z inside D_z");
    CssCodeInstance inst;
    inst.kind = CssKind::kHybrid;
    inst.input = CssInput{c_x, c_z, d_x, d_z};
    const int n = c_x.length();
    inst.r_x = c_x.dimension();
    inst.r_z = c_z.dimension();
    inst.inner_stabilizer = css_group(c_z.dual(), c_x.dual());
    inst.outer_stabilizer = css_group(d_z.dual(), d_x.dual());
    inst.inner_gauge = inst.inner_stabilizer;
    inst.outer_gauge = inst.outer_stabilizer;
    inst.params.n = n;
    inst.params.k = c_x.dimension() + c_z.dimension() - n;
    inst.params.m = d_x.dimension() + d_z.dimension() - c_x.dimension() - c_z.dimension();
    inst.params.d_x = distance_part(d_x, c_z.dual(), options);
    inst.params.d_z = distance_part(d_z, c_x.dual(), options);
    finish_distance(inst.params);
    attach_translations(inst);
    return inst;
}

CssCodeInstance css_hybrid_subsystem(const LinearCode &c_x, const LinearCode &c_z, const LinearCode &d_x,
                                     const LinearCode &d_z, const CssOptions &options) {
    require_same_length({&c_x, &c_z, &d_x, &d_z});
    require_subcode(c_x, d_x, "C_x inside D_x");
    require_subcode(c_z, d_z, "C_z inside D_z");
    // (D_x \ C_x) meets C_z^perp exactly when D_x cap C_z^perp is larger than C_x cap C_z^perp.
    require(code_intersection(d_x, c_z.dual()).dimension() == code_intersection(c_x, c_z.dual()).dimension(),
            ErrorCode::kClassicalLogicalIsGauge, "a word of D_x outside C_x lies in C_z^perp");
    require(code_intersection(d_z, c_x.dual()).dimension() == code_intersection(c_z, c_x.dual()).dimension(),
            ErrorCode::kClassicalLogicalIsGauge, "a word of D_z outside C_z lies in C_x^perp");
    CssCodeInstance inst;
    inst.kind = CssKind::kHybridSubsystem;
    inst.input = CssInput{c_x, c_z, d_x, d_z};
    inst.params.n = c_x.length();
    fill_subsystem_ranks(inst);
    inst.params.m = d_x.dimension() + d_z.dimension() - c_x.dimension() - c_z.dimension();
    inst.inner_gauge = css_group(c_z.dual(), c_x.dual());
    inst.outer_gauge = css_group(d_z.dual(), d_x.dual());
    inst.inner_stabilizer = css_group(code_intersection(c_x, c_z.dual()), code_intersection(c_z, c_x.dual()));
    inst.outer_stabilizer = css_group(code_intersection(d_x, d_z.dual()), code_intersection(d_z, d_x.dual()));
    inst.params.d_x = distance_part(code_sum(d_x, d_z.dual()), c_z.dual(), options);
    inst.params.d_z = distance_part(code_sum(d_z, d_x.dual()), c_x.dual(), options);
    finish_distance(inst.params);
    attach_translations(inst);
    return inst;
}

std::string css_csv_header() {
    return "n,k,m,r,d_x,d_z,d";
}

std::string css_csv_row(const CssCodeInstance &instance) {
    const auto &p = instance.params;
    std::ostringstream out;
    out << p.n << ',' << p.k << ',' << p.m << ',' << p.r << ',' << optional_text(p.d_x) << ','
        << optional_text(p.d_z) << ',' << optional_text(p.d);
    return out.str();
}

CssInput correspondence_input(const PairingBasis &basis, Family family) {
    const int n = basis.n;
    auto code = [n](std::initializer_list<const std::vector<BitVector> *> parts) {
        std::vector<BitVector> rows;
        for (const auto *part : parts) {
            rows.insert(rows.end(), part->begin(), part->end());
        }
        return LinearCode(n, rows);
    };
    const auto &qt = basis.q_tilde;
    const auto &tt = basis.t_tilde;
    switch (family) {
        case Family::kQ1:
            return CssInput{code({&qt, &basis.s_x}), code({&qt, &basis.s_z}), std::nullopt, std::nullopt};
        case Family::kQ5: {
            LinearCode c = code({&qt, &tt, &basis.s_x});
            LinearCode d = code({&qt, &tt, &basis.s_x, &basis.t_x});
            return CssInput{c, c, d, d};
        }
        case Family::kQ7:
            return CssInput{code({&qt, &basis.s_x}), code({&qt, &tt, &basis.s_z}), code({&qt, &basis.s_x, &basis.t_x}),
                            code({&qt, &tt, &basis.s_z})};
        default:
            fail(ErrorCode::kSpecMismatch, family_name(family) + " has no CSS correspondence; use Q1, Q5 or Q7");
    }
}

std::vector<CheckResult> check_correspondence(const CyclicCodePair &pair, const PairingBasis &basis,
                                              Family family) {
    const CssInput in = correspondence_input(basis, family);
    const CssOptions no_distance{false};
    CssCodeInstance css;
    switch (family) {
        case Family::kQ1:
            css = css_subsystem(in.c_x, in.c_z, no_distance);
            break;
        case Family::kQ5:
            css = css_hybrid(in.c_x, in.c_z, *in.d_x, *in.d_z, no_distance);
            break;
        default:
            css = css_hybrid_subsystem(in.c_x, in.c_z, *in.d_x, *in.d_z, no_distance);
            break;
    }
    CodeSpec spec;
    spec.family = family;
    const ExtendedCodeInstance inst = build_code(pair, basis, spec, BuildOptions{false});
    const std::string prefix = "css-" + css_kind_name(css.kind) + "-matches-" + family_name(family) + "-";
    std::vector<CheckResult> out;
    out.push_back(make_check(prefix + "inner-stabilizer",
                             same_group(css.inner_stabilizer, inst.inner_stabilizer_group(), PhaseMode::kExact)));
    out.push_back(make_check(prefix + "outer-stabilizer",
                             same_group(css.outer_stabilizer, inst.outer_stabilizer_group(), PhaseMode::kExact)));
    out.push_back(make_check(prefix + "inner-gauge", same_group(css.inner_gauge, inst.inner_gauge_group())));
    // The outer gauge group depends on which member of each translation coset is used; compare
    // cosets first, then the gauge elements commuting with the CSS representatives.
    PauliGroupSpan css_translations(inst.num_qubits);
    for (const auto *list : {&css.translations_x, &css.translations_z}) {
        for (const auto &t : *list) {
            css_translations.add(t);
        }
    }
    PauliGroupSpan built_cosets = inst.inner_stabilizer_group().centralizer();
    PauliGroupSpan css_cosets = built_cosets;
    for (const auto *list : {&inst.translations_b, &inst.translations_c}) {
        for (const auto &t : *list) {
            built_cosets.add(t.op);
        }
    }
    for (const auto &t : css_translations.generators()) {
        css_cosets.add(t);
    }
    out.push_back(make_check(prefix + "translation-cosets", same_group(built_cosets, css_cosets)));
    PauliGroupSpan commuting = group_intersection(inst.inner_gauge_group(), css_translations.centralizer());
    out.push_back(make_check(prefix + "outer-gauge", same_group(css.outer_gauge, commuting) &&
                                                         commuting.contains_subgroup(inst.outer_stabilizer_group())));
    const bool params_equal =
        css.params.k == inst.params.k && css.params.m == inst.params.m && css.params.r == inst.params.r;
    out.push_back(make_check(prefix + "parameters", params_equal,
                             "css (k,m,r)=(" + std::to_string(css.params.k) + "," + std::to_string(css.params.m) +
                                 "," + std::to_string(css.params.r) + ") family (" + std::to_string(inst.params.k) +
                                 "," + std::to_string(inst.params.m) + "," + std::to_string(inst.params.r) + ")"));
    return out;
}

std::optional<int> translation_coset_distance(const PauliGroupSpan &inner_stabilizer,
                                              const PauliGroupSpan &outer_stabilizer,
                                              const PauliGroupSpan &inner_gauge) {
    const int num_qubits = inner_stabilizer.num_qubits();
    const PauliGroupSpan dressed_inner = inner_stabilizer.centralizer();
    const PauliGroupSpan dressed_outer = outer_stabilizer.centralizer();
    if (dressed_outer.rank() > kMaxEnumerationRank) {
        return std::nullopt;
    }
    int best = min_weight_in_set_difference(dressed_inner, inner_gauge);

    std::vector<BitVector> inner_rows = dressed_inner.rows().basis();
    Gf2Span grown = dressed_inner.rows();
    std::vector<BitVector> translations;
    for (const auto &row : dressed_outer.rows().basis()) {
        if (grown.insert(row)) {
            translations.push_back(row);
        }
    }
    // t_i C(S0) t_j equals t_i t_j C(S0) up to phase; every i != j pair lands in the coset labelled i xor j.
    const uint64_t cosets = uint64_t{1} << translations.size();
    for (uint64_t label = 1; label < cosets; ++label) {
        BitVector offset(2 * num_qubits);
        for (size_t b = 0; b < translations.size(); ++b) {
            if ((label >> b) & 1) {
                offset ^= translations[b];
            }
        }
        best = std::min(best, min_pauli_weight_in_coset(offset, inner_rows, num_qubits));
    }
    return best;
}

std::vector<CheckResult> check_css_instance(const CssCodeInstance &instance) {
    std::vector<CheckResult> out;
    const auto &p = instance.params;
    const int n = p.n;
    out.push_back(make_check("stabilizers-abelian",
                             instance.inner_stabilizer.is_abelian() && instance.outer_stabilizer.is_abelian()));
    out.push_back(make_check("outer-inside-inner-stabilizer",
                             instance.inner_stabilizer.contains_subgroup(instance.outer_stabilizer, PhaseMode::kExact)));
    out.push_back(make_check("inner-stabilizer-inside-gauge",
                             instance.inner_gauge.contains_subgroup(instance.inner_stabilizer)));

    const int s0 = instance.inner_stabilizer.rank();
    const int g0 = instance.inner_gauge.rank();
    const int s = instance.outer_stabilizer.rank();
    const bool counts = (g0 - s0) == 2 * p.r && (s0 - s) == p.m && n - s0 - p.r == p.k;
    out.push_back(make_check("group-ranks-match-parameters", counts,
                             "rank S0=" + std::to_string(s0) + " G0=" + std::to_string(g0) +
                                 " S=" + std::to_string(s)));
    out.push_back(make_check("translations-change-phases-injectively", !instance.classical_degenerate,
                             "phase rank " + std::to_string(instance.phase_rank) + ", m " + std::to_string(p.m)));

    if (n <= 16) {
        const Gf2Span &cx = instance.input.c_x.span();
        const Gf2Span czp = instance.input.c_z.span().orthogonal_complement();
        uint64_t count = 0;
        for (uint64_t w = 0; w < (uint64_t{1} << n); ++w) {
            BitVector v = BitVector::from_word(n, w);
            if (cx.contains(v) && czp.contains(v)) {
                ++count;
            }
        }
        out.push_back(make_check("intersection-size-is-two-to-n-minus-r_z", count == (uint64_t{1} << (n - instance.r_z)),
                                 std::to_string(count) + " words"));
    }

    if (auto coset_form = translation_coset_distance(instance.inner_stabilizer, instance.outer_stabilizer,
                                                     instance.inner_gauge)) {
        const int direct = min_weight_in_set_difference(instance.outer_stabilizer.centralizer(), instance.inner_gauge);
        bool agree = *coset_form == direct;
        std::string detail = "coset form " + std::to_string(*coset_form) + ", direct " + std::to_string(direct);
        if (p.d) {
            agree = agree && *p.d == direct;
            detail += ", split " + std::to_string(*p.d);
        }
        out.push_back(make_check("distance-forms-agree", agree, detail));
    }
    return out;
}

}  // namespace qsync
