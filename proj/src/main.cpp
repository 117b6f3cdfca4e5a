#include "quartic/parse.hpp"
#include "quartic/report_json.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>
#include <vector>

namespace {

using namespace quartic;

constexpr int EXIT_PARSE = 2;
constexpr int EXIT_SINGULAR = 3;
constexpr int EXIT_UNSUPPORTED = 4;

struct OutputFlags {
    bool json = false;
    bool hsop = false;
    bool certificate = false;
};

void emit(const Json& doc, bool as_json, std::ostream& out) {
    if (as_json)
        out << doc.dump() << "\n";
    else
        out << render_human(doc) << "\n";
}

std::vector<long> collect_primes(const std::vector<long>& p_opts,
                                 const std::vector<long>& primes_opt) {
    std::vector<long> primes = p_opts;
    primes.insert(primes.end(), primes_opt.begin(), primes_opt.end());
    if (primes.empty())
        throw CLI::ValidationError("--p/--primes", "at least one prime is required");
    return primes;
}

TernaryForm curve_from_json(const Json& j) {
    if (j.is_string()) return parse_quartic_input(j.get<std::string>());
    if (j.is_array()) {
        if (j.size() != 15)
            throw std::domain_error("curve array must have 15 entries");
        std::vector<Rat> slots;
        for (const auto& e : j) {
            if (e.is_object()) slots.push_back(rat_from_json(e));
            else if (e.is_string()) slots.push_back(parse_rational(e.get<std::string>()));
            else if (e.is_number_integer()) slots.push_back(Rat(e.get<long>()));
            else throw std::domain_error("curve entry must be integer, string, or {num, den}");
        }
        TernaryForm f = quartic_from_coefficients(slots);
        if (f.zero()) throw std::domain_error("zero polynomial");
        return f;
    }
    throw std::domain_error("curve must be an expression string or a 15-entry array");
}

int run_invariants(const std::string& curve, const std::string& label,
                   const OutputFlags& flags) {
    TernaryForm F = parse_quartic_input(curve);
    emit(invariants_report(label, F), flags.json, std::cout);
    return 0;
}

int run_classify(const std::string& curve, const std::string& label,
                 const std::vector<long>& primes, const OutputFlags& flags) {
    TernaryForm F = parse_quartic_input(curve);
    bool first = true;
    for (long p : primes) {
        ReductionReport rep = classify(F, p);
        if (!flags.json && !first) std::cout << "\n";
        emit(classify_report(label, F, rep, flags.hsop, flags.certificate),
             flags.json, std::cout);
        first = false;
    }
    return 0;
}

int run_picard(const std::string& sa, const std::string& sb, const std::string& sc,
               const std::vector<long>& primes, const OutputFlags& flags) {
    Rat a = parse_rational(sa), b = parse_rational(sb), c = parse_rational(sc);
    bool first = true;
    for (long p : primes) {
        PicardReport rep = picard_classify(a, b, c, p);
        if (!flags.json && !first) std::cout << "\n";
        emit(picard_report_json(a, b, c, rep), flags.json, std::cout);
        first = false;
    }
    return 0;
}

int run_hsop(long p, const OutputFlags& flags) {
    Json doc = Json::object();
    doc["schema"] = REPORT_SCHEMA;
    doc["kind"] = "hsop";
    doc.update(hsop_report(p));
    emit(doc, flags.json, std::cout);
    return 0;
}

// One output line per input line, in input order, whatever the thread count.
std::string batch_line(const std::string& line, std::size_t lineno,
                       const OutputFlags& flags) {
    std::string label;
    auto fail = [&](const std::string& code, const std::string& message) {
        Json doc = error_report(label, code, message);
        doc["line"] = lineno;
        return doc.dump();
    };
    try {
        Json in = Json::parse(line);
        if (in.contains("label")) label = in["label"].get<std::string>();
        if (!in.contains("curve") || !in.contains("primes"))
            throw std::domain_error("line needs \"curve\" and \"primes\"");
        TernaryForm F = curve_from_json(in["curve"]);
        std::vector<long> primes = in["primes"].get<std::vector<long>>();
        if (primes.empty()) throw std::domain_error("empty prime list");

        Json doc = Json::object();
        doc["schema"] = REPORT_SCHEMA;
        doc["kind"] = "classify-batch";
        doc["line"] = lineno;
        if (!label.empty()) doc["label"] = label;
        Json reports = Json::array();
        for (long p : primes) {
            ReductionReport rep = classify(F, p);
            reports.push_back(classify_report(label, F, rep, flags.hsop,
                                              flags.certificate));
        }
        doc["reports"] = reports;
        return doc.dump();
    } catch (const Json::parse_error& e) {
        return fail("bad_line", e.what());
    } catch (const ParseError& e) {
        return fail("parse_error", e.what());
    } catch (const SingularCurve& e) {
        return fail("singular_curve", e.what());
    } catch (const UnsupportedPrime& e) {
        return fail("unsupported_prime", e.what());
    } catch (const std::exception& e) {
        return fail("error", e.what());
    }
}

int run_batch(const std::string& path, unsigned threads, const OutputFlags& flags) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return EXIT_PARSE;
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);

    std::vector<std::string> out(lines.size());
    std::vector<char> blank(lines.size(), 0);  // not vector<bool>: parallel writes

    auto work = [&](std::size_t i) {
        if (lines[i].find_first_not_of(" \t\r") == std::string::npos)
            blank[i] = 1;
        else
            out[i] = batch_line(lines[i], i + 1, flags);
    };

    if (threads <= 1) {
        for (std::size_t i = 0; i < lines.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= lines.size()) return;
                    work(i);
                }
            });
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < lines.size(); ++i)
        if (!blank[i]) std::cout << out[i] << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants and reduction types of smooth plane quartics"};
    app.require_subcommand(1);

    OutputFlags flags;
    std::string curve, label;
    std::vector<long> p_opts, primes_opt;
    std::string pa, pb, pc;
    std::string batch_path;
    unsigned threads = 1;
    long hsop_p = 0;

    auto add_output_flags = [&](CLI::App* cmd, bool with_cert) {
        cmd->add_flag("--json", flags.json, "emit NDJSON instead of text");
        if (with_cert) {
            cmd->add_flag("--hsop", flags.hsop, "include the parameter catalog used");
            cmd->add_flag("--certificate", flags.certificate,
                          "include all invariants and valuations");
        }
    };
    auto add_primes = [&](CLI::App* cmd) {
        cmd->add_option("--p", p_opts, "prime (repeatable)");
        cmd->add_option("--primes", primes_opt, "comma-separated primes")
            ->delimiter(',');
    };

    auto* cmd_inv = app.add_subcommand(
        "invariants", "exact invariants of a smooth plane quartic");
    cmd_inv->add_option("curve", curve,
                        "polynomial in x,y,z or [15 coefficients]")->required();
    cmd_inv->add_option("--label", label, "label echoed into the report");
    add_output_flags(cmd_inv, false);

    auto* cmd_cls = app.add_subcommand(
        "classify", "potential reduction type at the given primes");
    cmd_cls->add_option("curve", curve,
                        "polynomial in x,y,z or [15 coefficients]")->required();
    cmd_cls->add_option("--label", label, "label echoed into the report");
    add_primes(cmd_cls);
    add_output_flags(cmd_cls, true);

    auto* cmd_pic = app.add_subcommand(
        "picard", "valuation criterion for the family y^3 = x^4 + a x^2 + b x + c");
    cmd_pic->add_option("a", pa)->required();
    cmd_pic->add_option("b", pb)->required();
    cmd_pic->add_option("c", pc)->required();
    add_primes(cmd_pic);
    add_output_flags(cmd_pic, false);

    auto* cmd_hsop = app.add_subcommand(
        "hsop", "dump the invariant parameter catalog for a prime");
    cmd_hsop->add_option("--p", hsop_p, "prime")->required();
    add_output_flags(cmd_hsop, false);

    auto* cmd_batch = app.add_subcommand(
        "batch", "classify an NDJSON file of curves, order-preserving");
    cmd_batch->add_option("file", batch_path, "NDJSON input path")->required();
    cmd_batch->add_option("--threads", threads, "worker threads");
    cmd_batch->add_flag("--hsop", flags.hsop, "include the parameter catalog used");
    cmd_batch->add_flag("--certificate", flags.certificate,
                        "include all invariants and valuations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cmd_inv->parsed()) return run_invariants(curve, label, flags);
        if (cmd_cls->parsed())
            return run_classify(curve, label, collect_primes(p_opts, primes_opt), flags);
        if (cmd_pic->parsed())
            return run_picard(pa, pb, pc, collect_primes(p_opts, primes_opt), flags);
        if (cmd_hsop->parsed()) return run_hsop(hsop_p, flags);
        if (cmd_batch->parsed()) return run_batch(batch_path, threads, flags);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return EXIT_PARSE;
    } catch (const SingularCurve& e) {
        std::cerr << "singular curve: " << e.what() << "\n";
        return EXIT_SINGULAR;
    } catch (const UnsupportedPrime& e) {
        std::cerr << "unsupported prime: " << e.what() << "\n";
        return EXIT_UNSUPPORTED;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_PARSE;
    }
    return 0;
}
