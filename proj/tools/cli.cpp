// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "qsync/channel.hpp"
#include "qsync/error.hpp"
#include "qsync/io.hpp"
#include "qsync/simulate.hpp"
#include "qsync/verify.hpp"

namespace qsync::cli {

namespace {

struct KeyInfo {
    const char *name;
    const char *help;
};

// Every key a config file or flag may set.
const std::vector<KeyInfo> &known_keys() {
    static const std::vector<KeyInfo> keys{
        {"n", "block length"},
        {"p", "generator polynomial of C, e.g. 1+x+x^3"},
        {"q", "generator polynomial of D"},
        {"family", "Q1 .. Q7"},
        {"al", "ancillas before the block (a_l)"},
        {"ar", "ancillas after the block (a_r)"},
        {"y", "c-register width for Q4 and Q6"},
        {"b", "b message as a bit string"},
        {"c", "c message as a bit string"},
        {"distance", "compute the code distance: on|off (default on)"},
        {"px", "per-qubit X error probability"},
        {"pz", "per-qubit Z error probability"},
        {"shift", "uniform | <alpha> | <alpha>:<weight>,... (default 0)"},
        {"adversarial", "allow shifts outside [-a_l, a_r]: on|off"},
        {"trials", "number of simulated frames (default 1000)"},
        {"seed", "base seed (default 1)"},
        {"threads", "worker threads, 0 = all cores"},
        {"messages", "fixed | random (default fixed)"},
        {"variant", "table to dump: A | B | C | all (default all)"},
        {"corpus", "verify every pair of the listed lengths, e.g. 7,15"},
        {"out", "output directory (default $QSYNC_OUTPUT_DIR, else .)"},
        {"format", "text | json for standard output (default text)"},
    };
    return keys;
}

bool is_known(const std::string &key) {
    for (const auto &k : known_keys()) {
        if (key == k.name) {
            return true;
        }
    }
    return false;
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void usage(const std::string &message) {
    fail(ErrorCode::kUsage, message);
}

class Settings {
   public:
    explicit Settings(RunConfig values) : values_(std::move(values)) {
    }

    bool has(const std::string &key) const {
        return values_.count(key) > 0;
    }
    std::string text(const std::string &key) const {
        auto it = values_.find(key);
        if (it == values_.end()) {
            usage("missing required setting '" + key + "'");
        }
        return it->second;
    }
    std::string text_or(const std::string &key, const std::string &fallback) const {
        return has(key) ? text(key) : fallback;
    }
    long long integer(const std::string &key, long long fallback, bool required = false) const {
        if (!has(key)) {
            if (required) {
                usage("missing required setting '" + key + "'");
            }
            return fallback;
        }
        const std::string v = text(key);
        try {
            size_t used = 0;
            const long long out = std::stoll(v, &used);
            if (used != v.size()) {
                throw std::invalid_argument(v);
            }
            return out;
        } catch (const std::exception &) {
            usage("setting '" + key + "' expects an integer, got '" + v + "'");
        }
    }
    double real(const std::string &key, double fallback) const {
        if (!has(key)) {
            return fallback;
        }
        const std::string v = text(key);
        try {
            size_t used = 0;
            const double out = std::stod(v, &used);
            if (used != v.size()) {
                throw std::invalid_argument(v);
            }
            return out;
        } catch (const std::exception &) {
            usage("setting '" + key + "' expects a number, got '" + v + "'");
        }
    }
    bool flag(const std::string &key, bool fallback) const {
        if (!has(key)) {
            return fallback;
        }
        const std::string v = text(key);
        if (v == "on" || v == "true" || v == "1" || v == "yes") {
            return true;
        }
        if (v == "off" || v == "false" || v == "0" || v == "no") {
            return false;
        }
        usage("setting '" + key + "' expects on|off, got '" + v + "'");
    }

   private:
    RunConfig values_;
};

std::string output_dir(const Settings &s) {
    if (s.has("out")) {
        return s.text("out");
    }
    if (const char *env = std::getenv("QSYNC_OUTPUT_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return ".";
}

std::string output_path(const Settings &s, const std::string &file) {
    const std::string dir = output_dir(s);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " + dir + ": " + ec.message());
    }
    return (std::filesystem::path(dir) / file).string();
}

bool json_output(const Settings &s) {
    const std::string f = s.text_or("format", "text");
    if (f != "text" && f != "json") {
        usage("format must be text or json, got '" + f + "'");
    }
    return f == "json";
}

struct PairSetup {
    CyclicCodePair pair;
    PairingBasis basis;
};

PairSetup make_pair(const Settings &s) {
    const long long n = s.integer("n", 0, true);
    if (n < 2 || n > 127) {
        usage("n must lie in [2, 127]");
    }
    const auto p = BinaryPolynomial::parse(s.text("p"));
    const auto q = BinaryPolynomial::parse(s.text("q"));
    CyclicCodePair pair = CyclicCodePair::make(static_cast<int>(n), p, q);
    PairingBasis basis = build_pairing_basis(pair);
    return PairSetup{pair, basis};
}

CodeSpec make_spec(const Settings &s) {
    CodeSpec spec;
    spec.family = parse_family(s.text("family"));
    spec.a_l = static_cast<int>(s.integer("al", 0));
    spec.a_r = static_cast<int>(s.integer("ar", 0));
    spec.y = static_cast<int>(s.integer("y", 0));
    if (s.has("b")) {
        spec.message_b = BitVector::from_string(s.text("b"));
    }
    if (s.has("c")) {
        spec.message_c = BitVector::from_string(s.text("c"));
    }
    return spec;
}

ExtendedCodeInstance make_instance(const Settings &s, bool distance_default) {
    const PairSetup setup = make_pair(s);
    const CodeSpec spec = make_spec(s);
    return build_code(setup.pair, setup.basis, spec, BuildOptions{s.flag("distance", distance_default)});
}

ChannelModel make_channel(const Settings &s, const ExtendedCodeInstance &inst) {
    ChannelModel channel;
    channel.p_x = s.real("px", 0.0);
    channel.p_z = s.real("pz", 0.0);
    if (channel.p_x < 0 || channel.p_x > 1 || channel.p_z < 0 || channel.p_z > 1) {
        usage("px and pz must lie in [0, 1]");
    }
    channel.adversarial = s.flag("adversarial", false);
    const std::string shift = s.text_or("shift", "0");
    if (shift == "uniform") {
        for (int a = -inst.a_l; a <= inst.a_r; ++a) {
            channel.shift_weights.emplace_back(a, 1.0);
        }
    } else {
        std::stringstream list(shift);
        std::string item;
        while (std::getline(list, item, ',')) {
            const auto colon = item.find(':');
            try {
                const int alpha = std::stoi(trim(item.substr(0, colon)));
                const double weight = colon == std::string::npos ? 1.0 : std::stod(trim(item.substr(colon + 1)));
                channel.shift_weights.emplace_back(alpha, weight);
            } catch (const std::exception &) {
                usage("cannot parse shift entry '" + item + "'");
            }
        }
        if (channel.shift_weights.empty()) {
            usage("empty shift distribution");
        }
    }
    if (!channel.adversarial) {
        for (const auto &[alpha, weight] : channel.shift_weights) {
            if (weight > 0 && (alpha < -inst.a_l || alpha > inst.a_r)) {
                usage("shift " + std::to_string(alpha) + " lies outside [-" + std::to_string(inst.a_l) + ", " +
                      std::to_string(inst.a_r) + "]; set adversarial = on to allow it");
            }
        }
    }
    return channel;
}

// ---------------------------------------------------------------------------

int cmd_construct(const Settings &s, std::ostream &out) {
    const ExtendedCodeInstance inst = make_instance(s, true);
    const nlohmann::json j = instance_to_json(inst);
    const std::string path = output_path(s, "instance.json");
    write_text_file(path, j.dump(2) + "\n");
    if (json_output(s)) {
        out << j.dump(2) << "\n";
    } else {
        out << inst.name << " " << parameter_line(inst) << "\n";
        out << "instance written to " << path << "\n";
    }
    return kExitOk;
}

int cmd_verify(const Settings &s, std::ostream &out) {
    std::vector<CorpusPair> pairs;
    if (s.has("corpus")) {
        std::vector<int> lengths;
        const std::string list = s.text("corpus");
        if (list == "all") {
            lengths = corpus_lengths();
        } else {
            std::stringstream in(list);
            std::string item;
            while (std::getline(in, item, ',')) {
                try {
                    lengths.push_back(std::stoi(trim(item)));
                } catch (const std::exception &) {
                    usage("cannot parse corpus length '" + item + "'");
                }
            }
        }
        pairs = corpus_pairs(lengths);
    } else {
        PairSetup setup = make_pair(s);
        pairs.push_back(CorpusPair{setup.pair, setup.basis, ""});
    }

    nlohmann::json reports = nlohmann::json::array();
    bool all = true;
    for (const auto &cp : pairs) {
        const VerifyReport report = verify_pair(cp.pair, cp.basis);
        all = all && report.all_passed();
        reports.push_back(verify_report_to_json(report));
        if (!json_output(s)) {
            out << (report.all_passed() ? "PASS " : "FAIL ") << report.label << "\n";
            for (const auto &c : report.checks) {
                out << "  " << (c.passed() ? "pass" : "FAIL") << " " << c.name << " (" << c.cases << " cases";
                if (!c.passed()) {
                    out << ", " << c.failures << " failed; first: " << c.first_failure;
                }
                out << ")\n";
            }
        }
    }
    const nlohmann::json doc = {{"schema_version", kSchemaVersion}, {"passed", all}, {"reports", reports}};
    const std::string path = output_path(s, "verify.json");
    write_text_file(path, doc.dump(2) + "\n");
    if (json_output(s)) {
        out << doc.dump(2) << "\n";
    } else {
        out << (all ? "all checks passed" : "some checks failed") << "; report written to " << path << "\n";
    }
    return all ? kExitOk : kExitFailure;
}

int cmd_simulate(const Settings &s, std::ostream &out) {
    const ExtendedCodeInstance inst = make_instance(s, false);
    SimulationConfig config;
    config.channel = make_channel(s, inst);
    const long long trials = s.integer("trials", 1000);
    const long long seed = s.integer("seed", 1);
    const long long threads = s.integer("threads", 0);
    if (trials < 0 || seed < 0 || threads < 0) {
        usage("trials, seed and threads must be non-negative");
    }
    config.trials = static_cast<uint64_t>(trials);
    config.seed = static_cast<uint64_t>(seed);
    config.threads = static_cast<int>(threads);
    const std::string messages = s.text_or("messages", "fixed");
    if (messages != "fixed" && messages != "random") {
        usage("messages must be fixed or random, got '" + messages + "'");
    }
    config.random_messages = messages == "random";

    const SimulationResult result = run_simulation(inst, config);
    const std::string csv_path = output_path(s, "simulate.csv");
    const std::string json_path = output_path(s, "summary.json");
    write_text_file(csv_path, simulation_csv(result));
    const nlohmann::json summary = simulation_summary_to_json(inst, config, result.summary);
    write_text_file(json_path, summary.dump(2) + "\n");
    if (json_output(s)) {
        out << summary.dump(2) << "\n";
    } else {
        const SimulationSummary &r = result.summary;
        out << inst.name << " trials=" << r.trials << " sync=" << r.sync_successes << " classical="
            << r.classical_successes << " quantum=" << r.quantum_successes << " all=" << r.full_successes << "\n";
        out << "wrote " << csv_path << " and " << json_path << "\n";
    }
    return kExitOk;
}

int cmd_table(const Settings &s, std::ostream &out) {
    const ExtendedCodeInstance inst = make_instance(s, false);
    const std::string which = s.text_or("variant", "all");
    if (which != "all" && which != "A" && which != "B" && which != "C") {
        usage("variant must be A, B, C or all");
    }
    std::vector<SyncLookupTable> tables;
    const bool sync = is_synchronizable(*inst.family);
    if ((which == "all" || which == "A") && sync && inst.c_vectors.empty()) {
        tables.push_back(build_sync_table(inst, SyncTableVariant::kAlpha));
    }
    if ((which == "all" || which == "C") && sync && !inst.c_vectors.empty()) {
        tables.push_back(build_sync_table(inst, SyncTableVariant::kMessageAndAlpha));
    }
    if (which == "all" || which == "B") {
        if (!inst.b_vectors.empty()) {
            tables.push_back(build_sync_table(inst, SyncTableVariant::kMessage, {MessageRegister::kB, false}));
        }
        if (!sync && !inst.c_vectors.empty()) {
            tables.push_back(build_sync_table(inst, SyncTableVariant::kMessage, {MessageRegister::kC, false}));
        }
    }
    if (tables.empty()) {
        usage(inst.name + " has no lookup table of variant " + which);
    }
    nlohmann::json doc = nlohmann::json::array();
    for (const auto &t : tables) {
        doc.push_back(sync_table_to_json(t));
    }
    if (json_output(s)) {
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    for (const auto &t : tables) {
        out << "variant " << sync_table_variant_name(t.variant);
        if (t.variant != SyncTableVariant::kAlpha) {
            out << " (" << (t.message_register == MessageRegister::kB ? "b" : "c") << " register)";
        }
        out << ", " << t.domain_size << " entries, injective\n";
        for (const auto &[key, entry] : t.listing) {
            out << "  " << key.to_string() << " -> alpha=" << entry.alpha;
            if (entry.message.size() > 0) {
                out << " message=" << entry.message.to_string();
            }
            out << "\n";
        }
    }
    return kExitOk;
}

int cmd_search_pairs(const Settings &s, std::ostream &out) {
    const long long n = s.integer("n", 0, true);
    if (n < 2 || n > 127) {
        usage("n must lie in [2, 127]");
    }
    const auto pairs = search_pairs(static_cast<int>(n));
    nlohmann::json doc = nlohmann::json::array();
    if (!json_output(s)) {
        out << "n,p,q,k_c,k_d,gap,d_d\n";
    }
    for (const auto &cand : pairs) {
        const CyclicCodePair pair = CyclicCodePair::make(static_cast<int>(n), cand.p, cand.q);
        const int d_d = pair.d_min_distance();
        if (json_output(s)) {
            doc.push_back({{"n", n},
                           {"p", cand.p.format()},
                           {"q", cand.q.format()},
                           {"k_c", cand.kc},
                           {"k_d", cand.kd},
                           {"gap", cand.kd - cand.kc},
                           {"d_d", d_d}});
        } else {
            out << n << "," << cand.p.format() << "," << cand.q.format() << "," << cand.kc << "," << cand.kd << ","
                << cand.kd - cand.kc << "," << d_d << "\n";
        }
    }
    if (json_output(s)) {
        out << doc.dump(2) << "\n";
    }
    return kExitOk;
}

bool is_usage_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::kLemmaViolation:
        case ErrorCode::kConstructionInconsistency:
        case ErrorCode::kUncorrectableSync:
        case ErrorCode::kDimensionTooLarge:
            return false;
        default:
            return true;
    }
}

}  // namespace

RunConfig parse_config_text(const std::string &text) {
    RunConfig out;
    std::stringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            usage("config line " + std::to_string(number) + " is not 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!is_known(key)) {
            usage("unknown config key '" + key + "' on line " + std::to_string(number));
        }
        if (!out.emplace(key, value).second) {
            usage("config key '" + key + "' set twice");
        }
    }
    return out;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Synchronizable hybrid subsystem codes from cyclic code pairs"};
    app.require_subcommand(1);
    app.footer(
        "Settings come from --config FILE (lines of key = value) and from flags; flags win.\n"
        "Outputs go to --out, else $QSYNC_OUTPUT_DIR, else the current directory.\n"
        "simulate.csv columns: " +
        simulation_csv_header() +
        "\n"
        "Exit codes: 0 success, 1 verification or I/O failure, 2 usage or configuration error.");

    struct Command {
        const char *name;
        const char *help;
        int (*run)(const Settings &, std::ostream &);
        CLI::App *app = nullptr;
    };
    std::vector<Command> commands{
        {"construct", "build a code and write instance.json", cmd_construct},
        {"verify", "run the named property suites on a pair or a corpus", cmd_verify},
        {"simulate", "transmit and decode frames, writing simulate.csv and summary.json", cmd_simulate},
        {"table", "print the synchronization and message lookup tables", cmd_table},
        {"search-pairs", "list the valid (C, D) pairs of length n", cmd_search_pairs},
    };
    std::map<std::string, std::string> flag_values;
    std::string config_path;
    for (auto &cmd : commands) {
        cmd.app = app.add_subcommand(cmd.name, cmd.help);
        cmd.app->add_option("--config", config_path, "flat key = value settings file");
        for (const auto &k : known_keys()) {
            cmd.app->add_option(std::string("--") + k.name, flag_values[k.name], k.help);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (const auto &cmd : commands) {
        if (!cmd.app->parsed()) {
            continue;
        }
        try {
            RunConfig values;
            if (!config_path.empty()) {
                std::ifstream file(config_path);
                if (!file) {
                    usage("cannot read config file " + config_path);
                }
                std::stringstream buffer;
                buffer << file.rdbuf();
                values = parse_config_text(buffer.str());
            }
            for (const auto &k : known_keys()) {
                if (cmd.app->count(std::string("--") + k.name) > 0) {
                    values[k.name] = flag_values[k.name];
                }
            }
            return cmd.run(Settings(std::move(values)), out);
        } catch (const Error &e) {
            err << "error: " << e.what() << "\n";
            return is_usage_code(e.code()) ? kExitUsage : kExitFailure;
        } catch (const std::exception &e) {
            err << "error: " << e.what() << "\n";
            return kExitFailure;
        }
    }
    return kExitUsage;
}

}  // namespace qsync::cli
