#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "synchq/errors.hpp"
#include "synchq/involutions.hpp"
#include "synchq/json_io.hpp"
#include "synchq/qseries.hpp"
#include "synchq/syncpart.hpp"
#include "synchq/verifier.hpp"

namespace {

using nlohmann::json;
using namespace synchq;

enum class Format { text, json_lines };

Format parse_format(const std::string& f) {
    return f == "json" ? Format::json_lines : Format::text;
}

// Grid bound resolution: explicit flag, then SYNCHQ_GRID_LIMIT, then the
// check's default.
std::optional<int> env_grid_limit() {
    const char* v = std::getenv("SYNCHQ_GRID_LIMIT");
    if (!v || !*v) return std::nullopt;
    int value = 0;
    const char* end = v + std::string_view(v).size();
    auto [p, ec] = std::from_chars(v, end, value);
    if (ec != std::errc() || p != end || value < 0)
        throw error("SYNCHQ_GRID_LIMIT must be a nonnegative integer");
    return value;
}

std::string report_line(const VerificationReport& r) {
    std::ostringstream os;
    os << "[" << to_string(r.status) << "] " << r.check_name;
    for (const auto& [k, v] : r.parameters) os << " " << k << "=" << v;
    if (r.witness) os << " witness=" << r.witness->dump();
    return os.str();
}

void print_reports(const std::vector<VerificationReport>& reports, Format fmt,
                   std::ostream& out) {
    for (const VerificationReport& r : reports) {
        if (fmt == Format::json_lines)
            out << to_json(r).dump() << "\n";
        else
            out << report_line(r) << "\n";
    }
    if (fmt == Format::text) {
        int pass = 0, fail = 0, overflow = 0;
        for (const VerificationReport& r : reports) {
            if (r.status == Status::pass) ++pass;
            if (r.status == Status::fail) ++fail;
            if (r.status == Status::overflow) ++overflow;
        }
        out << "summary: " << pass << " pass, " << fail << " fail, "
            << overflow << " overflow\n";
    }
}

int run_verify(const std::string& check, std::optional<int> m,
               std::optional<int> n, std::optional<int> m_max,
               std::optional<int> n_max, Format fmt, std::ostream& out) {
    const CheckInfo* info = find_check(check);
    if (!info) throw unknown_check("unknown check: " + check);

    std::vector<VerificationReport> reports;
    if (m || n) {
        if (info->single_axis) {
            if (m || !n) {
                std::cerr << check << " takes only --n\n";
                return 1;
            }
            reports.push_back(run_single(check, 0, *n));
        } else {
            if (!m || !n) {
                std::cerr << check << " needs both --m and --n\n";
                return 1;
            }
            reports.push_back(run_single(check, *m, *n));
        }
    } else {
        std::optional<int> env = env_grid_limit();
        int mb = m_max.value_or(env.value_or(info->default_limit));
        int nb = n_max.value_or(env.value_or(info->default_limit));
        reports = run_grid(check, mb, nb);
    }
    print_reports(reports, fmt, out);
    return exit_code_for(reports);
}

int run_enumerate(const std::string& family, int m, int n,
                  std::optional<int> weight, bool zero_free_only,
                  Format fmt, bool unicode, std::ostream& out) {
    RenderOptions ropts{unicode};
    std::size_t count = 0;
    if (family == "sync") {
        for (const SyncPartition& s : enumerate_sync(m, n, weight)) {
            if (zero_free_only && !s.zero_free()) continue;
            ++count;
            if (fmt == Format::json_lines)
                out << to_json(s).dump() << "\n";
            else
                out << render(s, ropts) << "\n\n";
        }
    } else {
        for (const RootedSyncPartition& s : enumerate_rooted(m, n, weight)) {
            if (zero_free_only && !s.base().zero_free()) continue;
            ++count;
            if (fmt == Format::json_lines)
                out << to_json(s).dump() << "\n";
            else
                out << render(s, ropts) << "\n\n";
        }
    }
    if (fmt == Format::json_lines)
        out << json{{"count", count}}.dump() << "\n";
    else
        out << "count " << count << "\n";
    return 0;
}

int run_gf(const std::string& target, int m, int n, std::optional<int> k,
           Format fmt, std::ostream& out) {
    QPoly brute, closed;
    if (target == "sync-all") {
        brute = sync_gf(m, n);
        closed = sync_gf_formula(m, n);
    } else if (target == "sync-zero-free") {
        brute = sync_gf_zero_free(m, n);
        closed = sync_zero_free_gf_formula(m, n);
    } else if (target == "sync-by-discrepancy") {
        if (!k) {
            std::cerr << "sync-by-discrepancy needs --discrepancy\n";
            return 1;
        }
        brute = sync_gf_discrepancy(m, n, *k);
        closed = sync_discrepancy_gf_formula(m, n, *k);
    } else if (target == "rooted") {
        brute = rooted_gf(m, n, false);
        closed = rooted_gf_formula(m, n);
    } else {
        brute = rooted_gf(m, n, true);
        closed = finite_jacobi_rhs(m, n);
    }
    bool match = brute == closed;
    if (fmt == Format::json_lines) {
        json j{{"target", target},        {"m", m},
               {"n", n},                  {"brute", to_json(brute)},
               {"closed", to_json(closed)}, {"match", match}};
        if (k) j["discrepancy"] = *k;
        out << j.dump() << "\n";
    } else {
        out << "brute:  " << brute.to_string() << "\n";
        out << "closed: " << closed.to_string() << "\n";
        out << "match:  " << (match ? "yes" : "no") << "\n";
    }
    return match ? 0 : 2;
}

std::string indent(const std::string& block) {
    std::istringstream in(block);
    std::ostringstream os;
    std::string line;
    while (std::getline(in, line)) os << "    " << line << "\n";
    return os.str();
}

std::string sign_text(int s) { return s > 0 ? "+1" : "-1"; }

int run_trace(const std::string& inline_json, const std::string& file_path,
              std::optional<int> m_flag, std::optional<int> n_flag,
              Format fmt, bool unicode, std::ostream& out) {
    std::string text = inline_json;
    if (!file_path.empty()) {
        std::ifstream in(file_path);
        if (!in) throw error("cannot read " + file_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json parsed = json::parse(text);
    RootedSyncPartition start = rooted_from_json(parsed);
    int m = m_flag.value_or(start.base().alpha().largest());
    int n = n_flag.value_or(start.base().beta().largest());
    RenderOptions ropts{unicode};

    json steps = json::array();
    bool consistent = false;
    std::ostringstream human;
    if (start.is_degenerate()) {
        SyncPartition image = phi(start);
        RootedSyncPartition back = phi_inverse(image);
        consistent = back == start;
        steps.push_back(trace_step("phi", to_json(start), to_json(image),
                                   start.sign(), image.sign()));
        steps.push_back(trace_step("phi_inverse", to_json(image), to_json(back),
                                   image.sign(), back.sign()));
        human << "step 1: phi\n"
              << "  before (sign " << sign_text(start.sign()) << "):\n"
              << indent(render(start, ropts))
              << "  after (sign " << sign_text(image.sign()) << "):\n"
              << indent(render(image, ropts))
              << "step 2: phi_inverse\n"
              << "  before (sign " << sign_text(image.sign()) << "):\n"
              << indent(render(image, ropts))
              << "  after (sign " << sign_text(back.sign()) << "):\n"
              << indent(render(back, ropts));
    } else {
        TauResult forward = tau(start, m, n);
        TauResult back = tau(forward.result, m, n);
        consistent = back.result == start;
        steps.push_back(trace_step(to_string(forward.fired), to_json(start),
                                   to_json(forward.result), start.sign(),
                                   forward.result.sign()));
        steps.push_back(trace_step(to_string(back.fired),
                                   to_json(forward.result),
                                   to_json(back.result),
                                   forward.result.sign(),
                                   back.result.sign()));
        human << "step 1: tau case " << to_string(forward.fired) << "\n"
              << "  before (sign " << sign_text(start.sign()) << "):\n"
              << indent(render(start, ropts))
              << "  after (sign " << sign_text(forward.result.sign()) << "):\n"
              << indent(render(forward.result, ropts))
              << "step 2: tau case " << to_string(back.fired) << "\n"
              << "  before (sign " << sign_text(forward.result.sign())
              << "):\n"
              << indent(render(forward.result, ropts))
              << "  after (sign " << sign_text(back.result.sign()) << "):\n"
              << indent(render(back.result, ropts));
    }
    if (fmt == Format::json_lines) {
        out << steps.dump() << "\n";
    } else {
        out << human.str();
        out << "round trip: " << (consistent ? "consistent" : "INCONSISTENT")
            << "\n";
    }
    return consistent ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the finite Jacobi identity and its "
                 "synchronized-partition model"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string output_path;
    std::optional<int> m_opt, n_opt, m_max_opt, n_max_opt, weight_opt,
        discrepancy_opt;
    bool zero_free_only = false;
    bool unicode = false;
    std::string check, family, target, trace_json, trace_file;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--output", output_path,
                        "Write output to this file instead of stdout");
    };

    std::vector<std::string> names;
    for (const CheckInfo& info : known_checks()) names.push_back(info.name);

    CLI::App* verify = app.add_subcommand(
        "verify", "Run one check or a full (m, n) grid of checks");
    verify->add_option("check", check, "Check name")
        ->required()
        ->check(CLI::IsMember(names));
    verify->add_option("--m", m_opt, "First parameter");
    verify->add_option("--n", n_opt,
                       "Second parameter (n, or the truncation degree N)");
    verify->add_option("--m-max", m_max_opt, "Grid bound for m");
    verify->add_option("--n-max", n_max_opt, "Grid bound for n");
    add_io(verify);

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "List synchronized or rooted synchronized partitions");
    enumerate->add_option("family", family, "sync or rooted")
        ->required()
        ->check(CLI::IsMember({"sync", "rooted"}));
    enumerate->add_option("--m", m_opt, "Bound on the largest part of alpha")
        ->required();
    enumerate->add_option("--n", n_opt, "Bound on the largest part of beta")
        ->required();
    enumerate->add_option("--weight", weight_opt, "Keep this weight only");
    enumerate->add_flag("--zero-free", zero_free_only,
                        "Keep only elements whose beta has no zero part");
    enumerate->add_flag("--unicode-bar", unicode,
                        "Render the barred star with a combining overline");
    add_io(enumerate);

    CLI::App* gf = app.add_subcommand(
        "gf", "Compare a brute-force generating function to its closed form");
    gf->add_option("target", target, "Generating function family")
        ->required()
        ->check(CLI::IsMember({"sync-all", "sync-zero-free",
                               "sync-by-discrepancy", "rooted",
                               "rooted-signed"}));
    gf->add_option("--m", m_opt, "Bound on the largest part of alpha")
        ->required();
    gf->add_option("--n", n_opt, "Bound on the largest part of beta")
        ->required();
    gf->add_option("--discrepancy", discrepancy_opt,
                   "Discrepancy stratum for sync-by-discrepancy");
    add_io(gf);

    CLI::App* trace = app.add_subcommand(
        "trace", "Apply tau (or phi when degenerate) to one rooted "
                 "synchronized partition and round-trip it");
    CLI::Option* inline_opt = trace->add_option(
        "partition", trace_json,
        "Rooted partition as JSON, e.g. {\"alpha\":[2],\"beta\":[],\"bar\":1}");
    CLI::Option* file_opt =
        trace->add_option("--file", trace_file, "Read the JSON from a file");
    inline_opt->excludes(file_opt);
    trace->add_option("--m", m_opt,
                      "Bound for alpha parts (default: its largest part)");
    trace->add_option("--n", n_opt,
                      "Bound for beta parts (default: its largest part)");
    trace->add_flag("--unicode-bar", unicode,
                    "Render the barred star with a combining overline");
    add_io(trace);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        std::ofstream out_file;
        std::ostream* out = &std::cout;
        if (!output_path.empty()) {
            out_file.open(output_path);
            if (!out_file) throw error("cannot write " + output_path);
            out = &out_file;
        }
        Format fmt = parse_format(format);

        if (verify->parsed())
            return run_verify(check, m_opt, n_opt, m_max_opt, n_max_opt, fmt,
                              *out);
        if (enumerate->parsed())
            return run_enumerate(family, *m_opt, *n_opt, weight_opt,
                                 zero_free_only, fmt, unicode, *out);
        if (gf->parsed())
            return run_gf(target, *m_opt, *n_opt, discrepancy_opt, fmt, *out);
        if (trace->parsed()) {
            if (trace_json.empty() && trace_file.empty()) {
                std::cerr << "trace needs an inline JSON partition or "
                             "--file\n";
                return 1;
            }
            return run_trace(trace_json, trace_file, m_opt, n_opt, fmt,
                             unicode, *out);
        }
        return 1;
    } catch (const arithmetic_overflow& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
