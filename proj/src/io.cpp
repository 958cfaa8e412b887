// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsync/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qsync {

using nlohmann::json;

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    std::string out;
    out.reserve(2 * length);
    char buf[3];
    for (unsigned int i = 0; i < length; ++i) {
        std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
        out += buf;
    }
    return out;
}

std::string provenance_digest(const CodeProvenance &provenance) {
    std::ostringstream text;
    text << "n=" << provenance.n << "\np=" << provenance.p.format() << "\nq=" << provenance.q.format() << "\n";
    const PairingBasis &b = provenance.basis;
    const std::pair<const char *, const std::vector<BitVector> *> groups[] = {
        {"q_tilde", &b.q_tilde}, {"t_tilde", &b.t_tilde}, {"s_x", &b.s_x},     {"s_z", &b.s_z},
        {"t_x", &b.t_x},         {"t_z", &b.t_z},         {"q_prime", &b.q_prime}};
    for (const auto &[name, rows] : groups) {
        for (const auto &v : *rows) {
            text << name << " " << v.to_string() << "\n";
        }
    }
    return sha256_hex(text.str());
}

std::string parameter_line(const ExtendedCodeInstance &instance) {
    const CodeParameters &p = instance.params;
    const std::string d = p.d > 0 ? std::to_string(p.d) + (p.d_claimed ? "*" : "") : "-";
    return "((" + std::to_string(p.num_qubits) + "," + std::to_string(p.k) + "," + std::to_string(p.r) + "," + d +
           ")) m=" + std::to_string(p.m) + " d_sync=" + std::to_string(p.d_sync_max);
}

namespace {

json operators_json(const std::vector<EncodedOperator> &ops) {
    json out = json::array();
    for (const auto &op : ops) {
        out.push_back({{"label", op.label}, {"pauli", op.op.to_string()}});
    }
    return out;
}

}  // namespace

json instance_to_json(const ExtendedCodeInstance &instance) {
    const CodeParameters &p = instance.params;
    json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = instance.name;
    j["family"] = instance.family ? family_name(*instance.family) : "";
    j["n"] = instance.block_length();
    j["p"] = instance.provenance.p.format();
    j["q"] = instance.provenance.q.format();
    j["k_c"] = instance.provenance.kc;
    j["k_d"] = instance.provenance.kd;
    j["d_d"] = instance.provenance.d_d;
    j["a_l"] = instance.a_l;
    j["a_r"] = instance.a_r;
    j["y"] = instance.spec.y;
    j["message_b"] = instance.message_b.to_string();
    j["message_c"] = instance.message_c.to_string();
    j["parameters"] = {{"N", p.num_qubits}, {"k", p.k},          {"m", p.m},
                       {"r", p.r},          {"d", p.d > 0 ? json(p.d) : json(nullptr)},
                       {"d_claimed", p.d_claimed},
                       {"d_sync_max", p.d_sync_max}};
    j["observed_sync_window"] = instance.observed_sync_window;
    j["stabilizers"] = operators_json(instance.stabilizers);
    j["gauges"] = operators_json(instance.gauges);
    j["logical_x"] = operators_json(instance.logical_x);
    j["logical_z"] = operators_json(instance.logical_z);
    j["translations_b"] = operators_json(instance.translations_b);
    j["translations_c"] = operators_json(instance.translations_c);
    j["provenance_sha256"] = provenance_digest(instance.provenance);
    return j;
}

json verify_report_to_json(const VerifyReport &report) {
    json checks = json::array();
    for (const auto &c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"status", c.passed() ? "pass" : "fail"},
                          {"cases", c.cases},
                          {"failures", c.failures},
                          {"first_failure", c.first_failure}});
    }
    return {{"schema_version", kSchemaVersion},
            {"pair", report.label},
            {"passed", report.all_passed()},
            {"checks", checks}};
}

json sync_table_to_json(const SyncLookupTable &table) {
    json rows = json::array();
    for (const auto &[key, entry] : table.listing) {
        rows.push_back({{"syndrome", key.to_string()}, {"alpha", entry.alpha}, {"message", entry.message.to_string()}});
    }
    json out = {{"variant", sync_table_variant_name(table.variant)},
                {"register", nullptr},
                {"rows_used", table.row_count},
                {"domain_size", table.domain_size},
                {"entries", rows}};
    if (table.variant != SyncTableVariant::kAlpha) {
        out["register"] = table.message_register == MessageRegister::kB ? "b" : "c";
    }
    return out;
}

json simulation_summary_to_json(const ExtendedCodeInstance &instance, const SimulationConfig &config,
                                const SimulationSummary &summary) {
    auto rate = [&](uint64_t count) {
        return summary.trials == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(summary.trials);
    };
    json shifts = json::array();
    for (const auto &[alpha, weight] : config.channel.shift_weights) {
        shifts.push_back({{"alpha", alpha}, {"weight", weight}});
    }
    return {{"schema_version", kSchemaVersion},
            {"code", instance_to_json(instance)["name"]},
            {"parameters", parameter_line(instance)},
            {"provenance_sha256", provenance_digest(instance.provenance)},
            {"channel",
             {{"p_x", config.channel.p_x},
              {"p_z", config.channel.p_z},
              {"shifts", shifts},
              {"adversarial", config.channel.adversarial}}},
            {"seed", config.seed},
            {"random_messages", config.random_messages},
            {"trials", summary.trials},
            {"counts",
             {{"sync", summary.sync_successes},
              {"classical", summary.classical_successes},
              {"quantum", summary.quantum_successes},
              {"all", summary.full_successes},
              {"uncorrectable_sync", summary.uncorrectable_sync}}},
            {"rates",
             {{"sync", rate(summary.sync_successes)},
              {"classical", rate(summary.classical_successes)},
              {"quantum", rate(summary.quantum_successes)},
              {"all", rate(summary.full_successes)}}}};
}

std::string simulation_csv_header() {
    return "trial,alpha,x_errors,z_errors,message_b,message_c,recovered_alpha,recovered_b,recovered_c,sync,"
           "classical,quantum,residual";
}

std::string simulation_csv(const SimulationResult &result) {
    std::ostringstream out;
    out << simulation_csv_header() << "\n";
    for (const auto &rec : result.records) {
        const DecodeReport &r = rec.report;
        out << rec.trial << "," << rec.alpha << "," << rec.x_errors << "," << rec.z_errors << ","
            << rec.message_b.to_string() << "," << rec.message_c.to_string() << ","
            << (r.recovered_alpha ? std::to_string(*r.recovered_alpha) : std::string("none")) << ","
            << r.recovered_b.to_string() << "," << r.recovered_c.to_string() << "," << (r.sync_success ? 1 : 0)
            << "," << (r.classical_success ? 1 : 0) << "," << (r.quantum_success ? 1 : 0) << ","
            << residual_class_name(r.residual_class) << "\n";
    }
    return out.str();
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    file << text;
    file.close();
    if (!file) {
        throw std::runtime_error("failed writing " + path);
    }
}

}  // namespace qsync
