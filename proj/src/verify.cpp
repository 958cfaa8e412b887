// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsync/verify.hpp"

#include <map>

#include "qsync/channel.hpp"
#include "qsync/css.hpp"
#include "qsync/error.hpp"

namespace qsync {

const std::vector<int> &corpus_lengths() {
    static const std::vector<int> lengths{7, 15, 17, 21, 23, 31};
    return lengths;
}

std::vector<CorpusPair> corpus_pairs(const std::vector<int> &lengths) {
    std::vector<CorpusPair> out;
    for (int n : lengths) {
        for (const auto &cand : search_pairs(n)) {
            CyclicCodePair pair = CyclicCodePair::make(n, cand.p, cand.q);
            PairingBasis basis = build_pairing_basis(pair);
            out.push_back(CorpusPair{pair, basis,
                                     "n=" + std::to_string(n) + " p=" + cand.p.format() + " q=" + cand.q.format()});
        }
    }
    return out;
}

std::vector<CodeSpec> admissible_specs(int gap) {
    std::vector<CodeSpec> out;
    for (int f = 1; f <= 7; ++f) {
        const Family family = static_cast<Family>(f);
        const bool takes_y = family == Family::kQ4 || family == Family::kQ6;
        const int y_lo = takes_y ? 1 : 0;
        const int y_hi = takes_y ? gap - 2 : 0;
        for (int y = y_lo; y <= y_hi; ++y) {
            const int bound = !is_synchronizable(family) ? 1 : (takes_y ? gap - y : gap);
            for (int a_l = 0; a_l < bound; ++a_l) {
                for (int a_r = 0; a_l + a_r < bound; ++a_r) {
                    CodeSpec spec;
                    spec.family = family;
                    spec.a_l = a_l;
                    spec.a_r = a_r;
                    spec.y = y;
                    out.push_back(spec);
                }
            }
        }
    }
    return out;
}

bool VerifyReport::all_passed() const {
    for (const auto &c : checks) {
        if (!c.passed()) {
            return false;
        }
    }
    return true;
}

const SuiteCheck *VerifyReport::find(const std::string &name) const {
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

namespace {

class Recorder {
   public:
    explicit Recorder(VerifyReport &report) : report_(report) {
    }

    void record(const std::string &name, bool passed, const std::string &where, const std::string &detail = "") {
        SuiteCheck &check = slot(name);
        ++check.cases;
        if (!passed) {
            if (check.failures == 0) {
                check.first_failure = detail.empty() ? where : where + ": " + detail;
            }
            ++check.failures;
        }
    }

    void declare(const std::string &name) {
        slot(name);
    }

   private:
    SuiteCheck &slot(const std::string &name) {
        auto it = index_.find(name);
        if (it == index_.end()) {
            it = index_.emplace(name, report_.checks.size()).first;
            report_.checks.push_back(SuiteCheck{name, 0, 0, ""});
        }
        return report_.checks[it->second];
    }

    VerifyReport &report_;
    std::map<std::string, size_t> index_;
};

const std::map<std::string, std::string> &instance_check_groups() {
    static const std::map<std::string, std::string> groups{
        {"parameters-match-family-row", "family-parameters"},
        {"tradeoff-identity", "tradeoff-identity"},
        {"shifted-stabilizer-spans-equal", "shift-equivalence-stabilizers"},
        {"shifted-gauge-spans-equal", "shift-equivalence-gauge"},
        {"shifted-gauge-spans-equal-modulo-logicals", "shift-equivalence-gauge-modulo-logicals"},
        {"messages-give-distinct-phases", "message-phases-injective"},
    };
    return groups;
}

}  // namespace

VerifyReport verify_pair(const CyclicCodePair &pair, const PairingBasis &basis, const VerifyOptions &options) {
    VerifyReport report;
    report.label = "n=" + std::to_string(pair.n()) + " p=" + pair.c().generator_poly().format() +
                   " q=" + pair.d().generator_poly().format();
    Recorder rec(report);

    for (const auto &c : check_pairing_properties(pair, basis)) {
        rec.record("pairing-" + c.name, c.passed, report.label, c.detail);
    }
    try {
        pair.decompose_generators();
        rec.record("generator-decomposition", true, report.label);
    } catch (const Error &e) {
        rec.record("generator-decomposition", false, report.label, e.what());
    }

    for (const char *name :
         {"alignment-table-injective", "message-table-injective", "alignment-message-table-injective", "reduced-rows-suffice",
          "family-parameters", "tradeoff-identity", "message-phases-injective", "instance-structure",
          "shift-equivalence-stabilizers", "shift-equivalence-gauge", "shift-equivalence-gauge-modulo-logicals",
          "encoding-circuit", "ancilla-z-equivalence", "two-window-cover"}) {
        rec.declare(name);
    }

    for (const CodeSpec &spec : admissible_specs(pair.gap())) {
        ExtendedCodeInstance inst;
        std::string where = family_name(spec.family) + "(a_l=" + std::to_string(spec.a_l) +
                            ",a_r=" + std::to_string(spec.a_r) + ",y=" + std::to_string(spec.y) + ")";
        try {
            inst = build_code(pair, basis, spec, BuildOptions{false});
            where = inst.name;
        } catch (const Error &e) {
            rec.record("instance-structure", false, where, e.what());
            continue;
        }

        for (const auto &c : check_instance(inst)) {
            auto it = instance_check_groups().find(c.name);
            const std::string group = it == instance_check_groups().end() ? "instance-structure" : it->second;
            rec.record(group, c.passed, where, c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
        }

        auto table_case = [&](const std::string &name, SyncTableVariant variant, MessageRegister reg) {
            try {
                const bool reduced = sync_table_injective(inst, variant, {reg, false});
                const bool full = sync_table_injective(inst, variant, {reg, true});
                rec.record(name, reduced, where);
                rec.record("reduced-rows-suffice", !full || reduced, where);
            } catch (const Error &e) {
                rec.record(name, false, where, e.what());
            }
        };
        if (is_synchronizable(spec.family)) {
            if (inst.c_vectors.empty()) {
                table_case("alignment-table-injective", SyncTableVariant::kAlpha, MessageRegister::kB);
            } else {
                table_case("alignment-message-table-injective", SyncTableVariant::kMessageAndAlpha, MessageRegister::kC);
            }
        }
        if (!inst.b_vectors.empty()) {
            table_case("message-table-injective", SyncTableVariant::kMessage, MessageRegister::kB);
        }
        if (!is_synchronizable(spec.family) && !inst.c_vectors.empty()) {
            table_case("message-table-injective", SyncTableVariant::kMessage, MessageRegister::kC);
        }

        if (options.encoding_circuit) {
            try {
                const CheckResult c = verify_encoding_circuit(pair, basis, spec);
                rec.record("encoding-circuit", c.passed, where, c.detail);
            } catch (const Error &e) {
                rec.record("encoding-circuit", false, where, e.what());
            }
        }
        const CheckResult anc = check_ancilla_z_equivalence(inst);
        rec.record("ancilla-z-equivalence", anc.passed, where, anc.detail);
        const CheckResult cover = check_window_cover(inst);
        rec.record("two-window-cover", cover.passed, where, cover.detail);
    }

    if (options.css_correspondence) {
        for (Family family : {Family::kQ1, Family::kQ5, Family::kQ7}) {
            const std::string name = "css-correspondence-" + family_name(family);
            try {
                for (const auto &c : check_correspondence(pair, basis, family)) {
                    rec.record(name, c.passed, report.label, c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
                }
            } catch (const Error &e) {
                rec.record(name, false, report.label, e.what());
            }
        }
    }
    return report;
}

}  // namespace qsync
