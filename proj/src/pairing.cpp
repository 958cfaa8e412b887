// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsync/pairing.hpp"

#include "qsync/error.hpp"
#include "qsync/pauli.hpp"

namespace qsync {

namespace {

int first_self_odd(const std::vector<BitVector> &w) {
    for (size_t j = 0; j < w.size(); ++j) {
        if (w[j].dot(w[j])) {
            return static_cast<int>(j);
        }
    }
    return -1;
}

int first_partner_of_head(const std::vector<BitVector> &w) {
    for (size_t j = 1; j < w.size(); ++j) {
        if (w[0].dot(w[j])) {
            return static_cast<int>(j);
        }
    }
    return -1;
}

void require_orthogonal_to(const std::vector<BitVector> &rest, const BitVector &removed, const char *where) {
    for (const auto &v : rest) {
        require(!v.dot(removed), ErrorCode::kPairInvariant,
                std::string(where) + ": an updated vector is not orthogonal to a paired vector");
    }
}

}  // namespace

LogicalPairs pair_logicals(const std::vector<BitVector> &p_vectors) {
    std::vector<BitVector> w = p_vectors;
    for (size_t j = 0; j < w.size(); ++j) {
        bool partnered = false;
        for (size_t k = 0; k < w.size() && !partnered; ++k) {
            partnered = w[j].dot(w[k]);
        }
        require(partnered, ErrorCode::kDegenerateInput,
                "input vector " + std::to_string(j + 1) + " is orthogonal to every input vector");
    }
    LogicalPairs out;
    while (!w.empty()) {
        std::vector<BitVector> next;
        int j = first_self_odd(w);
        if (j >= 0) {
            const BitVector pivot = w[static_cast<size_t>(j)];
            out.s_x.push_back(pivot);
            out.s_z.push_back(pivot);
            for (size_t k = 0; k < w.size(); ++k) {
                if (static_cast<int>(k) == j) {
                    continue;
                }
                BitVector v = w[k];
                if (v.dot(pivot)) {
                    v ^= pivot;
                }
                next.push_back(v);
            }
            require_orthogonal_to(next, pivot, "logical pairing");
        } else {
            j = first_partner_of_head(w);
            require(j >= 0, ErrorCode::kDegenerateInput, "no vector pairs with the leading vector");
            const BitVector head = w[0];
            const BitVector partner = w[static_cast<size_t>(j)];
            out.s_x.push_back(head);
            out.s_z.push_back(partner);
            out.s_x.push_back(partner);
            out.s_z.push_back(head);
            for (size_t k = 1; k < w.size(); ++k) {
                if (static_cast<int>(k) == j) {
                    continue;
                }
                BitVector v = w[k];
                const bool with_head = w[k].dot(head);
                const bool with_partner = w[k].dot(partner);
                if (static_cast<int>(k) > j && with_head) {
                    v ^= partner;
                }
                if (with_partner) {
                    v ^= head;
                }
                next.push_back(v);
            }
            require_orthogonal_to(next, head, "logical pairing");
            require_orthogonal_to(next, partner, "logical pairing");
        }
        w = std::move(next);
    }
    return out;
}

std::vector<BitVector> project_out_logicals(const std::vector<BitVector> &q_rows, const LogicalPairs &logicals) {
    std::vector<BitVector> out;
    for (const auto &q : q_rows) {
        BitVector v = q;
        for (size_t l = 0; l < logicals.s_x.size(); ++l) {
            if (q.dot(logicals.s_x[l])) {
                v ^= logicals.s_z[l];
            }
        }
        out.push_back(v);
    }
    return out;
}

std::vector<BitVector> project_out_logicals_swapped(const std::vector<BitVector> &q_rows,
                                                    const LogicalPairs &logicals) {
    return project_out_logicals(q_rows, LogicalPairs{logicals.s_z, logicals.s_x});
}

GaugeTriples pair_gauges(const std::vector<BitVector> &p_check, const std::vector<BitVector> &q_prime) {
    require(p_check.size() == q_prime.size(), ErrorCode::kLengthMismatch,
            "gauge pairing needs as many check rows as projected generators");
    const int n = p_check.empty() ? 0 : p_check.front().size();
    const Gf2Span check_span = Gf2Span::of(n, p_check);
    std::vector<BitVector> w = p_check;
    w.insert(w.end(), q_prime.begin(), q_prime.end());
    GaugeTriples out;
    while (!w.empty()) {
        const BitVector head = w[0];
        require(check_span.contains(head), ErrorCode::kPairInvariant,
                "leading vector left the span of the check rows");
        require(!head.dot(head), ErrorCode::kPairInvariant, "leading vector is not self-orthogonal");
        int j = first_partner_of_head(w);
        require(j >= 0, ErrorCode::kNoPartner,
                "no vector anticommutes with check-row combination " + std::to_string(out.t_tilde.size() + 1));
        const BitVector partner = w[static_cast<size_t>(j)];
        const bool odd_partner = partner.dot(partner);
        out.t_tilde.push_back(head);
        out.t_x.push_back(partner);
        out.t_z.push_back(odd_partner ? head ^ partner : partner);
        std::vector<BitVector> next;
        for (size_t k = 1; k < w.size(); ++k) {
            if (static_cast<int>(k) == j) {
                continue;
            }
            BitVector v = w[k];
            const bool with_head = w[k].dot(head);
            const bool with_partner = w[k].dot(partner);
            if (with_partner) {
                v ^= head;
            }
            if (with_head) {
                v ^= odd_partner ? head ^ partner : partner;
            }
            next.push_back(v);
        }
        require_orthogonal_to(next, head, "gauge pairing");
        require_orthogonal_to(next, partner, "gauge pairing");
        w = std::move(next);
    }
    return out;
}

PairingBasis build_pairing_basis(const CyclicCodePair &pair) {
    GeneratorDecomposition dec = pair.decompose_generators();
    LogicalPairs logicals = pair_logicals(dec.p_rows);
    std::vector<BitVector> q_prime = project_out_logicals(dec.q_rows, logicals);
    GaugeTriples gauges = pair_gauges(dec.p_check, q_prime);
    PairingBasis basis;
    basis.n = pair.n();
    basis.q_tilde = dec.q_check;
    basis.t_tilde = gauges.t_tilde;
    basis.s_x = logicals.s_x;
    basis.s_z = logicals.s_z;
    basis.t_x = gauges.t_x;
    basis.t_z = gauges.t_z;
    basis.q_prime = q_prime;
    std::string failed;
    for (const auto &check : check_pairing_properties(pair, basis)) {
        if (!check.passed) {
            failed += (failed.empty() ? "" : ", ") + check.name + " (" + check.detail + ")";
        }
    }
    require(failed.empty(), ErrorCode::kPairInvariant, "pairing basis fails " + failed);
    return basis;
}

namespace {

using Rows = std::vector<BitVector>;

Rows join(std::initializer_list<const Rows *> parts) {
    Rows out;
    for (const Rows *p : parts) {
        out.insert(out.end(), p->begin(), p->end());
    }
    return out;
}

bool same_span(int n, const Rows &a, const Rows &b) {
    return Gf2Span::of(n, a) == Gf2Span::of(n, b);
}

// Returns an empty string when every a[i] . b[j] equals the expected value.
std::string dot_table_mismatch(const Rows &a, const Rows &b, bool identity, const char *a_name, const char *b_name) {
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            bool expected = identity && i == j;
            if (a[i].dot(b[j]) != expected) {
                return std::string(a_name) + "[" + std::to_string(i + 1) + "] . " + b_name + "[" +
                       std::to_string(j + 1) + "] != " + (expected ? "1" : "0");
            }
        }
    }
    return {};
}

CheckResult make_check(std::string name, const std::vector<std::string> &problems) {
    CheckResult c{std::move(name), true, {}};
    for (const auto &p : problems) {
        if (!p.empty()) {
            c.passed = false;
            c.detail += (c.detail.empty() ? "" : "; ") + p;
        }
    }
    return c;
}

}  // namespace

std::vector<CheckResult> check_pairing_properties(const CyclicCodePair &pair, const PairingBasis &b) {
    const int n = pair.n();
    GeneratorDecomposition dec = pair.decompose_generators();
    std::vector<CheckResult> out;
    auto span_problem = [&](const Rows &x, const Rows &y, const std::string &what) {
        return same_span(n, x, y) ? std::string() : what;
    };

    const Rows tilde_and_prime = join({&dec.p_check, &b.q_prime});
    out.push_back(make_check(
        "property-1",
        {span_problem(b.s_x, dec.p_rows, "span(s_x) != span(p)"), span_problem(b.s_z, dec.p_rows, "span(s_z) != span(p)"),
         span_problem(b.t_tilde, dec.p_check, "span(t~) != span(p~)"),
         span_problem(join({&b.t_tilde, &b.t_x}), tilde_and_prime, "span(t~, t_x) != span(p~, q')"),
         span_problem(join({&b.t_tilde, &b.t_z}), tilde_and_prime, "span(t~, t_z) != span(p~, q')")}));

    const Rows c_rows = pair.c().generator_rows();
    const Rows c_dual = pair.c().check_rows();
    const Rows d_rows = pair.d().generator_rows();
    out.push_back(make_check(
        "property-2",
        {span_problem(join({&b.q_tilde, &b.t_tilde}), c_dual, "span(q~, t~) != dual of C"),
         span_problem(join({&b.q_tilde, &b.t_tilde, &b.s_x}), c_rows, "span(q~, t~, s_x) != C"),
         span_problem(join({&b.q_tilde, &b.t_tilde, &b.s_z}), c_rows, "span(q~, t~, s_z) != C"),
         span_problem(join({&b.q_tilde, &b.t_tilde, &b.s_x, &b.t_x}), d_rows, "span(q~, t~, s_x, t_x) != D"),
         span_problem(join({&b.q_tilde, &b.t_tilde, &b.s_z, &b.t_z}), d_rows, "span(q~, t~, s_z, t_z) != D")}));

    out.push_back(make_check("property-3", {dot_table_mismatch(b.q_tilde, b.q_tilde, false, "q~", "q~"),
                                            dot_table_mismatch(b.q_tilde, b.t_tilde, false, "q~", "t~"),
                                            dot_table_mismatch(b.q_tilde, b.s_x, false, "q~", "s_x"),
                                            dot_table_mismatch(b.q_tilde, b.s_z, false, "q~", "s_z"),
                                            dot_table_mismatch(b.q_tilde, b.t_x, false, "q~", "t_x"),
                                            dot_table_mismatch(b.q_tilde, b.t_z, false, "q~", "t_z")}));
    out.push_back(make_check("property-4", {dot_table_mismatch(b.t_tilde, b.t_tilde, false, "t~", "t~"),
                                            dot_table_mismatch(b.t_tilde, b.s_x, false, "t~", "s_x"),
                                            dot_table_mismatch(b.t_tilde, b.s_z, false, "t~", "s_z")}));
    out.push_back(make_check("property-5", {dot_table_mismatch(b.s_x, b.s_z, true, "s_x", "s_z")}));
    out.push_back(make_check("property-6", {dot_table_mismatch(b.t_tilde, b.t_x, true, "t~", "t_x"),
                                            dot_table_mismatch(b.t_tilde, b.t_z, true, "t~", "t_z")}));
    out.push_back(make_check("property-7", {dot_table_mismatch(b.s_x, b.t_z, false, "s_x", "t_z"),
                                            dot_table_mismatch(b.s_z, b.t_x, false, "s_z", "t_x")}));
    out.push_back(make_check("property-8", {dot_table_mismatch(b.t_x, b.t_z, false, "t_x", "t_z")}));

    // The operator set N0 and its intended anticommuting pairs.
    struct Tagged {
        PauliOperator op;
        std::string name;
        int pair_id;
    };
    std::vector<Tagged> n0;
    int next_pair = 0;
    for (size_t i = 0; i < b.q_tilde.size(); ++i) {
        n0.push_back({PauliOperator::x_type(b.q_tilde[i]), "X(q~" + std::to_string(i + 1) + ")", -1});
        n0.push_back({PauliOperator::z_type(b.q_tilde[i]), "Z(q~" + std::to_string(i + 1) + ")", -1});
    }
    for (size_t l = 0; l < b.s_x.size(); ++l, ++next_pair) {
        n0.push_back({PauliOperator::x_type(b.s_x[l]), "X(s_x" + std::to_string(l + 1) + ")", next_pair});
        n0.push_back({PauliOperator::z_type(b.s_z[l]), "Z(s_z" + std::to_string(l + 1) + ")", next_pair});
    }
    for (size_t j = 0; j < b.t_tilde.size(); ++j) {
        n0.push_back({PauliOperator::x_type(b.t_tilde[j]), "X(t~" + std::to_string(j + 1) + ")", next_pair});
        n0.push_back({PauliOperator::z_type(b.t_z[j]), "Z(t_z" + std::to_string(j + 1) + ")", next_pair++});
        n0.push_back({PauliOperator::z_type(b.t_tilde[j]), "Z(t~" + std::to_string(j + 1) + ")", next_pair});
        n0.push_back({PauliOperator::x_type(b.t_x[j]), "X(t_x" + std::to_string(j + 1) + ")", next_pair++});
    }
    std::string n0_problem;
    for (size_t a = 0; a < n0.size() && n0_problem.empty(); ++a) {
        for (size_t c = a + 1; c < n0.size(); ++c) {
            bool expected = n0[a].pair_id >= 0 && n0[a].pair_id == n0[c].pair_id;
            if (symplectic_product(n0[a].op, n0[c].op) != expected) {
                n0_problem = n0[a].name + " and " + n0[c].name + (expected ? " commute" : " anticommute");
                break;
            }
        }
    }
    out.push_back(make_check("n0-anticommutation", {n0_problem}));

    LogicalPairs logicals{b.s_x, b.s_z};
    bool symmetric = project_out_logicals(dec.q_rows, logicals) == b.q_prime &&
                     project_out_logicals_swapped(dec.q_rows, logicals) == b.q_prime;
    out.push_back(make_check("q-prime-symmetry", {symmetric ? "" : "the two projection formulas disagree"}));
    return out;
}

}  // namespace qsync
