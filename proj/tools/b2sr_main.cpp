// Command line front end: decide identities over the five element
// matrix-unit semiring, produce refuting valuations or axiomatic
// derivations, and check derivation files.
//
// Exit codes: 0 success (identity valid, proof verified), 1 negative
// result (identity refuted, proof rejected), 2 input or usage errors,
// 3 internal invariant failures.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "b2sr/b2.hpp"
#include "b2sr/decision.hpp"
#include "b2sr/derive.hpp"
#include "b2sr/oracle.hpp"
#include "b2sr/proof_checker.hpp"
#include "b2sr/proof_json.hpp"
#include "b2sr/rho.hpp"
#include "b2sr/terms.hpp"
#include "b2sr/witness.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

using nlohmann::json;

b2sr::Polynomial parse_side(const std::string& text, const char* side) {
    try {
        return b2sr::parse_polynomial(text);
    } catch (const b2sr::ParseError& e) {
        std::ostringstream msg;
        msg << side << ": parse error at offset " << e.offset() << ": "
            << e.what();
        throw b2sr::ParseError(msg.str(), e.offset());
    }
}

json valuation_to_json(const b2sr::Valuation& val) {
    json j = json::object();
    for (const auto& [letter, value] : val.assignment()) {
        j[letter.symbol()] = std::string(b2sr::b2_name(value));
    }
    return j;
}

json verdict_to_json(const b2sr::Verdict& v) {
    json j;
    j["valid"] = v.valid;
    if (v.failed_condition) {
        j["failed_condition"] =
            std::string(b2sr::condition_name(*v.failed_condition));
    } else {
        j["failed_condition"] = nullptr;
    }
    j["detail"] = v.detail;
    return j;
}

int run_check(const std::string& lhs, const std::string& rhs, bool json_out) {
    b2sr::Polynomial p = parse_side(lhs, "lhs");
    b2sr::Polynomial q = parse_side(rhs, "rhs");
    b2sr::Verdict v = b2sr::decide(p, q);
    if (json_out) {
        std::cout << verdict_to_json(v).dump(2) << '\n';
    } else if (v.valid) {
        std::cout << "valid\n";
    } else {
        std::cout << "invalid ("
                  << b2sr::condition_name(*v.failed_condition)
                  << "): " << v.detail << '\n';
    }
    return v.valid ? exit_ok : exit_negative;
}

int run_oracle(const std::string& lhs, const std::string& rhs,
               std::size_t max_letters, std::size_t threads, bool json_out) {
    b2sr::Polynomial p = parse_side(lhs, "lhs");
    b2sr::Polynomial q = parse_side(rhs, "rhs");
    b2sr::OracleResult r =
        b2sr::oracle_check(p, q, {max_letters, threads});
    if (json_out) {
        json j;
        j["holds"] = r.holds;
        j["valuations"] = r.valuations;
        j["counterexample"] =
            r.counterexample ? valuation_to_json(*r.counterexample)
                             : json(nullptr);
        std::cout << j.dump(2) << '\n';
    } else if (r.holds) {
        std::cout << "holds (" << r.valuations << " valuations)\n";
    } else {
        std::cout << "refuted by";
        for (const auto& [letter, value] : r.counterexample->assignment()) {
            std::cout << ' ' << letter.symbol() << '='
                      << b2sr::b2_name(value);
        }
        std::cout << " (valuation " << r.valuations << ")\n";
    }
    return r.holds ? exit_ok : exit_negative;
}

int run_witness(const std::string& lhs, const std::string& rhs) {
    b2sr::Polynomial p = parse_side(lhs, "lhs");
    b2sr::Polynomial q = parse_side(rhs, "rhs");
    b2sr::Verdict v = b2sr::decide(p, q);
    if (v.valid) {
        std::cerr << "the identity is valid, no separating valuation "
                     "exists\n";
        return exit_negative;
    }
    b2sr::Valuation w = b2sr::build_witness(p, q, v);
    json j;
    j["failed_condition"] =
        std::string(b2sr::condition_name(*v.failed_condition));
    j["valuation"] = valuation_to_json(w);
    j["lhs_value"] = std::string(b2sr::b2_name(b2sr::eval_poly(p, w)));
    j["rhs_value"] = std::string(b2sr::b2_name(b2sr::eval_poly(q, w)));
    std::cout << j.dump(2) << '\n';
    return exit_ok;
}

int run_rho(const std::string& poly) {
    b2sr::Polynomial p = parse_side(poly, "polynomial");
    b2sr::RhoPartition part = b2sr::build_rho(p);
    json j;
    json letters = json::array();
    for (const b2sr::Letter& l : part.letters()) letters.push_back(l.symbol());
    j["letters"] = std::move(letters);
    json classes = json::array();
    for (std::size_t c = 0; c < part.class_count(); ++c) {
        json cls = json::array();
        for (const b2sr::Position& pos : part.class_members(c)) {
            cls.push_back(pos.str());
        }
        classes.push_back(std::move(cls));
    }
    j["classes"] = std::move(classes);
    j["init_class"] = part.init_class();
    j["term_class"] = part.term_class();
    std::cout << j.dump(2) << '\n';
    return exit_ok;
}

int run_derive(const std::string& lhs, const std::string& rhs,
               const std::string& out_path) {
    b2sr::Polynomial p = parse_side(lhs, "lhs");
    b2sr::Polynomial q = parse_side(rhs, "rhs");
    b2sr::Verdict v = b2sr::decide(p, q);
    if (!v.valid) {
        std::cerr << "identity does not hold ("
                  << b2sr::condition_name(*v.failed_condition)
                  << "): " << v.detail << '\n';
        return exit_negative;
    }
    b2sr::DerivationPair pair = b2sr::derive_identity(p, q);
    b2sr::CheckResult forward = b2sr::check_derivation(pair.forward, p);
    b2sr::CheckResult backward = b2sr::check_derivation(pair.backward, q);
    if (!forward.ok() || !backward.ok()) {
        std::cerr << "internal error: produced derivation fails its own "
                     "check\n";
        for (const auto& f : forward.failures) {
            std::cerr << "  lhs<=rhs node " << f.node_id << ": " << f.reason
                      << '\n';
        }
        for (const auto& f : backward.failures) {
            std::cerr << "  rhs<=lhs node " << f.node_id << ": " << f.reason
                      << '\n';
        }
        return exit_internal;
    }
    std::string text = b2sr::derivation_pair_to_json(pair);
    if (out_path.empty()) {
        std::cout << text << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open " << out_path << " for writing\n";
            return exit_usage;
        }
        out << text << '\n';
    }
    return exit_ok;
}

int run_verify(const std::string& file, const std::vector<std::string>& against,
               bool json_out) {
    b2sr::Polynomial p = parse_side(against[0], "lhs");
    b2sr::Polynomial q = parse_side(against[1], "rhs");
    std::ifstream in(file);
    if (!in) {
        std::cerr << "cannot open " << file << '\n';
        return exit_usage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::vector<b2sr::DirectedDerivation> derivations =
        b2sr::derivations_from_json(buffer.str());

    json failures = json::array();
    bool forward_seen = false;
    bool backward_seen = false;
    auto report = [&](const std::string& direction, std::uint32_t node,
                      const std::string& reason) {
        json f;
        f["direction"] = direction;
        if (node == b2sr::check_no_node) {
            f["node"] = nullptr;
        } else {
            f["node"] = node;
        }
        f["reason"] = reason;
        failures.push_back(std::move(f));
        if (!json_out) {
            std::cout << direction << ": ";
            if (node != b2sr::check_no_node) std::cout << "node " << node << ": ";
            std::cout << reason << '\n';
        }
    };

    for (const b2sr::DirectedDerivation& dd : derivations) {
        bool forward = dd.direction == "lhs<=rhs";
        (forward ? forward_seen : backward_seen) = true;
        const b2sr::Polynomial& goal = forward ? q : p;
        const b2sr::Polynomial& counterpart = forward ? p : q;
        if (dd.derivation.goal != goal) {
            report(dd.direction, b2sr::check_no_node,
                   "goal " + dd.derivation.goal.str() +
                       " does not match the identity side " + goal.str());
            continue;
        }
        b2sr::CheckResult r =
            b2sr::check_derivation(dd.derivation, counterpart);
        for (const auto& f : r.failures) {
            report(dd.direction, f.node_id, f.reason);
        }
    }
    if (!forward_seen) {
        report("lhs<=rhs", b2sr::check_no_node,
               "no derivation for this direction in the file");
    }
    if (!backward_seen) {
        report("rhs<=lhs", b2sr::check_no_node,
               "no derivation for this direction in the file");
    }

    bool ok = failures.empty();
    if (json_out) {
        json j;
        j["verified"] = ok;
        j["failures"] = std::move(failures);
        std::cout << j.dump(2) << '\n';
    } else if (ok) {
        std::cout << "verified: " << p.str() << " = " << q.str() << '\n';
    } else {
        std::cout << "rejected\n";
    }
    return ok ? exit_ok : exit_negative;
}

// Cross checks every component against every other over one finite
// family of identities. Any disagreement is an internal error.
int run_selftest(const std::vector<std::size_t>& family, std::size_t threads,
                 bool json_out) {
    std::size_t alphabet = family[0];
    std::size_t max_summands = family[1];
    std::size_t max_len = family[2];
    std::uint64_t pairs = 0;
    std::uint64_t valid = 0;
    std::uint64_t invalid = 0;
    bool ok = true;
    std::string complaint;

    b2sr::for_each_identity(
        alphabet, max_len, max_summands,
        [&](const b2sr::Polynomial& p, const b2sr::Polynomial& q) {
            if (!ok) return;
            ++pairs;
            b2sr::Verdict v = b2sr::decide(p, q);
            b2sr::OracleResult o =
                b2sr::oracle_check(p, q, {8, threads});
            if (v.valid != o.holds) {
                ok = false;
                complaint = "decision and oracle disagree on " + p.str() +
                            " = " + q.str();
                return;
            }
            if (!v.valid) {
                ++invalid;
                b2sr::Valuation w = b2sr::build_witness(p, q, v);
                if (b2sr::holds(p, q, w)) {
                    ok = false;
                    complaint = "witness fails to separate " + p.str() +
                                " = " + q.str();
                }
                return;
            }
            ++valid;
            b2sr::DerivationPair pair = b2sr::derive_identity(p, q);
            if (!b2sr::check_derivation(pair.forward, p).ok() ||
                !b2sr::check_derivation(pair.backward, q).ok()) {
                ok = false;
                complaint = "derivation fails its check on " + p.str() +
                            " = " + q.str();
            }
        });

    if (json_out) {
        json j;
        j["pairs"] = pairs;
        j["valid"] = valid;
        j["invalid"] = invalid;
        j["ok"] = ok;
        if (!ok) j["error"] = complaint;
        std::cout << j.dump(2) << '\n';
    } else if (ok) {
        std::cout << "self test passed: " << pairs << " identities, "
                  << valid << " valid, " << invalid << " refuted\n";
    } else {
        std::cout << "self test FAILED: " << complaint << '\n';
    }
    return ok ? exit_ok : exit_internal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Decide polynomial identities over the five element matrix-unit "
        "semiring, with refuting valuations and checkable derivations"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit machine readable JSON");

    std::string lhs, rhs, poly, file, out_path;
    std::size_t max_letters = 8;
    std::size_t threads = 1;
    std::vector<std::string> against;
    std::vector<std::size_t> family{2, 2, 3};

    CLI::App* check =
        app.add_subcommand("check", "decide whether an identity holds");
    check->add_option("lhs", lhs, "left side polynomial")->required();
    check->add_option("rhs", rhs, "right side polynomial")->required();

    CLI::App* oracle = app.add_subcommand(
        "oracle", "decide by exhausting all valuations (small inputs)");
    oracle->add_option("lhs", lhs, "left side polynomial")->required();
    oracle->add_option("rhs", rhs, "right side polynomial")->required();
    oracle->add_option("--max-letters", max_letters,
                       "refuse beyond this many distinct letters");
    oracle->add_option("--threads", threads, "worker threads");

    CLI::App* witness = app.add_subcommand(
        "witness", "produce a valuation separating the two sides");
    witness->add_option("lhs", lhs, "left side polynomial")->required();
    witness->add_option("rhs", rhs, "right side polynomial")->required();

    CLI::App* rho = app.add_subcommand(
        "rho", "print the position classes of a polynomial");
    rho->add_option("polynomial", poly, "the polynomial")->required();

    CLI::App* derive = app.add_subcommand(
        "derive", "derive a valid identity from the axioms");
    derive->add_option("lhs", lhs, "left side polynomial")->required();
    derive->add_option("rhs", rhs, "right side polynomial")->required();
    derive->add_option("-o,--output", out_path,
                       "write the proof JSON here instead of stdout");

    CLI::App* verify = app.add_subcommand(
        "verify", "check a derivation file against an identity");
    verify->add_option("file", file, "proof JSON file")->required();
    verify
        ->add_option("--against", against,
                     "the identity's two sides, in order")
        ->expected(2)
        ->required();

    CLI::App* selftest = app.add_subcommand(
        "selftest", "cross check all components on a finite family");
    selftest
        ->add_option("--family", family,
                     "alphabet size, max summands, max word length")
        ->delimiter(',')
        ->expected(3);
    selftest->add_option("--threads", threads, "oracle worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*check) return run_check(lhs, rhs, json_out);
        if (*oracle) {
            return run_oracle(lhs, rhs, max_letters, threads, json_out);
        }
        if (*witness) return run_witness(lhs, rhs);
        if (*rho) return run_rho(poly);
        if (*derive) return run_derive(lhs, rhs, out_path);
        if (*verify) return run_verify(file, against, json_out);
        if (*selftest) return run_selftest(family, threads, json_out);
    } catch (const b2sr::ParseError& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    } catch (const b2sr::OracleRefusal& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    } catch (const b2sr::ProofJsonError& e) {
        std::cerr << "proof file rejected: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_usage;
}
