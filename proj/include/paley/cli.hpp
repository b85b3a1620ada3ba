#pragma once

// Command-line front end. run() is the whole program minus main(), so tests
// can drive it with string vectors and captured streams.
//
// Exit codes: 0 ok, 1 internal invariant failure, 2 bad input, 3 violated
// hypothesis, 4 size cap, 5 verify mismatch.

#include <algorithm>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paley/closed_forms.hpp"
#include "paley/graph_oracle.hpp"
#include "paley/local_rings.hpp"
#include "paley/quadforms.hpp"
#include "paley/report.hpp"
#include "paley/towers.hpp"

namespace paley::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kHypothesis = 3,
    kSizeCap = 4,
    kMismatch = 5,
};

inline int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::BadDescriptor:
        case ErrorKind::BadArgument:
        case ErrorKind::NonPrime:
        case ErrorKind::ReducibleModulus:
            return kUsage;
        case ErrorKind::SizeCap:
            return kSizeCap;
        case ErrorKind::OrderUnavailable:
        case ErrorKind::NotCoprime:
        case ErrorKind::NoRepresentation:
        case ErrorKind::OddExtensionForInertPrime:
        case ErrorKind::NotRepresentable:
        case ErrorKind::MinimalityProbeFailed:
        case ErrorKind::HypothesisViolated:
        case ErrorKind::DirectedGraph:
            return kHypothesis;
        case ErrorKind::NonIntegralBracket:
        case ErrorKind::InvariantViolation:
            return kInternal;
    }
    return kInternal;
}

struct Options {
    std::string ring;
    std::uint64_t k = 2;
    int ell = 3;
    std::string format = "json";
    std::string convention = "paper";
    std::uint64_t max_vertices = kCliqueCountCap;
    unsigned threads = 0;
    int table_id = 1;
    unsigned max_ell = 5;
    std::uint64_t q = 0;
    std::string form = "x2_4y2";
    std::string mode = "coprime";
};

namespace detail {

inline ff::BinomConvention parse_convention(const std::string& s) {
    return s == "greene" ? ff::BinomConvention::Greene : ff::BinomConvention::PaperLiteral;
}

inline formulas::CliqueReport oracle_only(const LocalRing& R, const Options& o) {
    formulas::CliqueReport rep;
    rep.ring = R.descriptor().str();
    rep.request = {BigInt(R.q()), R.beta(), R.p(), R.r(), o.k, o.ell};
    require(R.size() <= o.max_vertices, ErrorKind::SizeCap,
            "|R|=" + std::to_string(R.size()) + " exceeds the oracle cap " + std::to_string(o.max_vertices));
    const auto G = unitary_power_graph(R, o.k);
    rep.oracle_value = count_cliques(G, o.ell, o.max_vertices, o.threads);
    return rep;
}

inline void emit(std::ostream& out, const Options& o, const formulas::CliqueReport& r) {
    if (o.format == "csv") report::write_csv(out, r);
    else if (o.format == "text") report::write_text(out, r);
    else out << report::to_json(r).dump(2) << '\n';
}

inline void emit(std::ostream& out, const Options& o, const towers::TableReport& t) {
    if (o.format == "csv") report::write_csv(out, t);
    else if (o.format == "text") report::write_text(out, t);
    else out << report::to_json(t).dump(2) << '\n';
}

inline void emit_json_or_text(std::ostream& out, const Options& o, const report::Json& j) {
    if (o.format == "json") {
        out << j.dump(2) << '\n';
        return;
    }
    const char* sep = o.format == "csv" ? "," : ": ";
    for (const auto& [k, v] : j.items()) out << k << sep << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

inline qf::QFRep solve_reps(const Options& o) {
    const auto pp = as_prime_power(o.q);
    require(pp.has_value(), ErrorKind::BadArgument, std::to_string(o.q) + " is not a prime power");
    const BigInt q = o.q;
    if (o.form == "x2_4y2")
        return qf::rep_x2_4y2(q, pp->p, o.mode == "e" ? qf::X2Mode::ENormalized : qf::X2Mode::CoprimeOnly);
    if (o.form == "c2_27d2") return qf::rep_4q_c2_27d2(q, pp->p);
    if (o.form == "x2_27y2") return qf::rep_x2_27y2(q, pp->p);
    return qf::rep_u2_2v2(q, pp->p);
}

inline report::Json criteria(const Options& o) {
    const auto R = LocalRing::build(o.ring);
    const auto S = kth_power_set(R, o.k);
    report::Json j = {
        {"ring", R.descriptor().str()},
        {"k", o.k},
        {"q", R.q()},
        {"undirected_criterion", undirected_criterion(R.q(), o.k)},
        {"connection_set_symmetric", S.symmetric},
        {"connected_criterion", connected_criterion(R.p(), R.r(), o.k)},
        {"degree", S.elements.size()},
    };
    if (R.size() <= kGraphSizeCap) {
        const bool bfs = is_connected(cayley_graph(R, S));
        j["connected_bfs"] = bfs;
        // a balanced blow-up of a connected graph on >= 2 vertices stays connected
        j["agree"] = S.symmetric == undirected_criterion(R.q(), o.k) && bfs == connected_criterion(R.p(), R.r(), o.k);
    } else {
        j["connected_bfs"] = nullptr;
        j["agree"] = S.symmetric == undirected_criterion(R.q(), o.k);
    }
    return j;
}

}  // namespace detail

/// Parses `args` (without the program name) and executes one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Clique counts of generalized Paley graphs and unitary Cayley graphs over local rings", "paley"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> formats{"json", "csv", "text"};
    auto add_ring_opts = [&](CLI::App* sub) {
        sub->add_option("--ring", o.ring, "fq:p,r | zpk:p,alpha | gr:p,alpha,r | fqt:p,r,n")->required();
        sub->add_option("--k", o.k, "exponent k")->required()->check(CLI::PositiveNumber);
        sub->add_option("--ell", o.ell, "clique size")->required();
        sub->add_option("--format", o.format)->check(CLI::IsMember(formats));
    };
    auto add_oracle_opts = [&](CLI::App* sub) {
        sub->add_option("--max-vertices", o.max_vertices, "oracle vertex cap");
        sub->add_option("--threads", o.threads, "oracle threads (0 = hardware)");
    };
    const std::vector<std::string> conventions{"paper", "greene"};

    auto* formula = app.add_subcommand("formula", "closed formula with intermediates");
    add_ring_opts(formula);
    formula->add_option("--convention", o.convention, "binomial-symbol convention")->check(CLI::IsMember(conventions));

    auto* oracle = app.add_subcommand("oracle", "brute-force clique count");
    add_ring_opts(oracle);
    add_oracle_opts(oracle);

    auto* verify = app.add_subcommand("verify", "formula against oracle; exit 5 on mismatch");
    add_ring_opts(verify);
    add_oracle_opts(verify);
    verify->add_option("--convention", o.convention)->check(CLI::IsMember(conventions));

    auto* table = app.add_subcommand("table", "reproduce a published tower table");
    table->add_option("--id", o.table_id, "table id (1, 2, 3)")->required()->check(CLI::Range(1, 3));
    table->add_option("--max-ell", o.max_ell, "last ell")->check(CLI::Range(1u, 64u));
    table->add_option("--format", o.format)->check(CLI::IsMember(formats));

    auto* reps = app.add_subcommand("reps", "normalized quadratic-form representation");
    reps->add_option("--q", o.q, "target (a prime power)")->required();
    reps->add_option("--form", o.form)->check(CLI::IsMember(std::vector<std::string>{"x2_4y2", "c2_27d2", "x2_27y2", "u2_2v2"}));
    reps->add_option("--mode", o.mode, "x2_4y2 normalization")->check(CLI::IsMember(std::vector<std::string>{"coprime", "e"}));
    reps->add_option("--format", o.format)->check(CLI::IsMember(formats));

    auto* crit = app.add_subcommand("criteria", "undirected and connected criteria with BFS confirmation");
    crit->add_option("--ring", o.ring)->required();
    crit->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
    crit->add_option("--format", o.format)->check(CLI::IsMember(formats));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*formula) {
            const auto R = LocalRing::build(o.ring);
            detail::emit(out, o, formulas::formula_report(R, o.k, o.ell, detail::parse_convention(o.convention)));
        } else if (*oracle) {
            const auto R = LocalRing::build(o.ring);
            detail::emit(out, o, detail::oracle_only(R, o));
        } else if (*verify) {
            const auto R = LocalRing::build(o.ring);
            auto rep = formulas::formula_report(R, o.k, o.ell, detail::parse_convention(o.convention));
            rep.set_oracle(*detail::oracle_only(R, o).oracle_value);
            detail::emit(out, o, rep);
            return rep.match.value_or(false) ? kOk : kMismatch;
        } else if (*table) {
            detail::emit(out, o, towers::reproduce_table(o.table_id, o.max_ell));
        } else if (*reps) {
            detail::emit_json_or_text(out, o, report::to_json(detail::solve_reps(o)));
        } else if (*crit) {
            const auto j = detail::criteria(o);
            detail::emit_json_or_text(out, o, j);
            return j["agree"].get<bool>() ? kOk : kMismatch;
        }
    } catch (const Error& e) {
        if (o.format == "json")
            err << report::Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << '\n';
        else
            err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kOk;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

}  // namespace paley::cli
