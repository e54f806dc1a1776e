// Command-line surface: loads a specification, runs one query, and
// reports through the exit code. Contract: 0 = true / proven / success,
// 1 = false, 2 = unknown / gave up, 3 = any error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "afreg/io.hpp"
#include "afreg/oracle.hpp"
#include "afreg/semantics.hpp"
#include "afreg/serialize.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitError = 3;

struct Options {
    std::string spec_path;
    std::string set_regex;
    std::string arg_word;
    std::string args_words;  // comma separated
    std::string format = "json";
    std::string out_path;
    int max_iter = 64;
    int budget = 256;
    std::size_t max_len = 16;
    std::size_t max_count = 100;
};

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw afreg::Error("cannot write file '" + out_path + "'");
    out << text;
}

// Canonical serialization plus a short human-readable preview of the
// language's first members.
void emit_set(const afreg::Dfa& d, const Options& opt) {
    write_output(opt.format == "dot" ? afreg::to_dot(d) : afreg::to_json(d),
                 opt.out_path);
    auto words = d.enumerate(20, 1000);
    std::cout << "# members:";
    for (const auto& w : words)
        std::cout << ' ' << render_word(d.alphabet(), w);
    if (words.size() == 20) std::cout << " ...";
    if (words.empty()) std::cout << " (none)";
    std::cout << '\n';
}

afreg::Dfa parse_set(const afreg::AfSpec& spec, const std::string& regex) {
    return compile_regex(parse_regex(regex, spec.alphabet()), spec.alphabet());
}

std::vector<afreg::Word> parse_words(const afreg::AfSpec& spec,
                                     const std::string& csv) {
    std::vector<afreg::Word> out;
    std::string cur;
    std::istringstream in(csv);
    while (std::getline(in, cur, ','))
        out.push_back(parse_word(spec.alphabet(), cur));
    return out;
}

int exit_bool(bool value) {
    std::cout << (value ? "true" : "false") << '\n';
    return value ? kExitTrue : kExitFalse;
}

int run_validate(const afreg::AfSpec& spec) {
    afreg::ValidationReport r = spec.validate();
    for (const auto& w : r.warnings) std::cout << "warning: " << w << '\n';
    for (const auto& e : r.errors) std::cout << "error: " << e << '\n';
    if (!r.ok()) return kExitError;
    std::cout << "ok\n";
    return kExitTrue;
}

int run_grounded(const afreg::AfSpec& spec, const Options& opt) {
    afreg::GroundedResult g = afreg::grounded(spec, opt.max_iter);
    bool done = g.status == afreg::GroundedResult::Status::Completed;
    std::cout << "# status: " << (done ? "completed" : "exhausted")
              << " iterations: " << g.iterations << '\n';
    if (afreg::finitary_syntactic(spec) == afreg::FinitaryStatus::Unknown)
        std::cout << "# note: finitary status unknown for this "
                     "specification; treat the result accordingly\n";
    emit_set(g.extension, opt);
    return done ? kExitTrue : kExitUnknown;
}

int run_semidecision(const afreg::SemiDecisionResult& r) {
    bool proven = r.status == afreg::SemiDecisionResult::Status::Proven;
    std::cout << (proven ? "proven" : "unknown") << " k=" << r.witness_k
              << '\n';
    return proven ? kExitTrue : kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Automata-based reasoner for regular argumentation "
                 "frameworks"};
    app.require_subcommand(1);
    Options opt;

    auto add_spec = [&](CLI::App* c) {
        c->add_option("spec", opt.spec_path, "specification file (.afs)")
            ->required();
        return c;
    };
    auto add_set = [&](CLI::App* c, bool required) {
        auto* o = c->add_option("--set", opt.set_regex,
                                "argument set as a regex over the spec "
                                "alphabet");
        if (required) o->required();
        return c;
    };
    auto add_output = [&](CLI::App* c) {
        c->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "dot"}));
        c->add_option("--out", opt.out_path, "write output to a file");
        return c;
    };

    CLI::App* validate = add_spec(app.add_subcommand(
        "validate", "check the specification's structural rules"));
    CLI::App* attackers = add_output(add_set(
        add_spec(app.add_subcommand("attackers",
                                    "arguments attacking the given set")),
        true));
    CLI::App* attacked = add_output(add_set(
        add_spec(app.add_subcommand("attacked",
                                    "arguments attacked by the given set")),
        true));
    CLI::App* cf = add_set(
        add_spec(app.add_subcommand("check-conflict-free",
                                    "no member attacks another member")),
        true);
    CLI::App* adm = add_set(
        add_spec(app.add_subcommand("check-admissible",
                                    "conflict-free and self-defending")),
        true);
    CLI::App* stable = add_set(
        add_spec(app.add_subcommand("check-stable",
                                    "conflict-free and attacking every "
                                    "outside argument")),
        true);
    CLI::App* complete = add_set(
        add_spec(app.add_subcommand("check-complete",
                                    "conflict-free fixpoint of the "
                                    "characteristic function")),
        true);
    CLI::App* acceptable = add_set(
        add_spec(app.add_subcommand("acceptable",
                                    "the set defends the given argument")),
        false);
    acceptable->add_option("--arg", opt.arg_word, "argument word")->required();
    CLI::App* character = add_output(add_set(
        add_spec(app.add_subcommand("characteristic",
                                    "arguments defended by the given set")),
        true));
    CLI::App* ground = add_output(add_spec(app.add_subcommand(
        "grounded", "least-fixpoint extension via layer peeling")));
    ground->add_option("--max-iter", opt.max_iter, "iteration bound")
        ->check(CLI::PositiveNumber);
    CLI::App* sd_stable = add_spec(app.add_subcommand(
        "semidecide-stable-empty",
        "semi-decide that no stable extension exists"));
    sd_stable->add_option("--budget", opt.budget, "words to enumerate")
        ->check(CLI::PositiveNumber);
    CLI::App* sd_cred = add_spec(app.add_subcommand(
        "semidecide-cred-none",
        "semi-decide that no listed argument is in any admissible set"));
    sd_cred->add_option("--budget", opt.budget, "words to enumerate")
        ->check(CLI::PositiveNumber);
    sd_cred
        ->add_option("--args", opt.args_words,
                     "comma-separated argument words")
        ->required();
    CLI::App* finitary = add_spec(app.add_subcommand(
        "finitary", "syntactic finite-attackers guarantee"));
    CLI::App* enumerate = add_spec(app.add_subcommand(
        "enum", "list argument words in length-lex order"));
    enumerate->add_option("--max-len", opt.max_len, "maximum word length");
    enumerate->add_option("--max-count", opt.max_count, "maximum word count");
    CLI::App* import_apx = app.add_subcommand(
        "import-apx", "encode a finite framework file as a specification");
    import_apx->add_option("file", opt.spec_path, "APX file")->required();
    import_apx->add_option("--out", opt.out_path, "write output to a file");
    CLI::App* combine_cmd = app.add_subcommand(
        "combine", "build one specification from a combination manifest");
    combine_cmd->add_option("file", opt.spec_path, "manifest file")
        ->required();
    combine_cmd->add_option("--out", opt.out_path, "write output to a file");
    CLI::App* export_cmd = add_output(add_set(
        add_spec(app.add_subcommand("export",
                                    "serialize a set's canonical automaton")),
        false));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (import_apx->parsed()) {
            afreg::AfSpec spec =
                encode_finite_af(afreg::load_apx(opt.spec_path));
            afreg::ValidationReport r = spec.validate();
            for (const auto& w : r.warnings)
                std::cout << "warning: " << w << '\n';
            write_output(render_afs(spec), opt.out_path);
            return kExitTrue;
        }
        if (combine_cmd->parsed()) {
            afreg::AfSpec spec = afreg::load_manifest(opt.spec_path);
            if (!spec.validate().ok())
                throw afreg::Error("combined specification is invalid: " +
                                   spec.validate().errors.front());
            write_output(render_afs(spec), opt.out_path);
            return kExitTrue;
        }

        afreg::AfSpec spec = afreg::load_afs(opt.spec_path);
        if (validate->parsed()) return run_validate(spec);
        {
            afreg::ValidationReport r = spec.validate();
            if (!r.ok())
                throw afreg::Error("specification is invalid: " +
                                   r.errors.front());
        }

        if (attackers->parsed()) {
            emit_set(spec.attackers(parse_set(spec, opt.set_regex)), opt);
            return kExitTrue;
        }
        if (attacked->parsed()) {
            emit_set(spec.attacked(parse_set(spec, opt.set_regex)), opt);
            return kExitTrue;
        }
        if (cf->parsed())
            return exit_bool(
                is_conflict_free(spec, parse_set(spec, opt.set_regex)));
        if (adm->parsed())
            return exit_bool(
                is_admissible(spec, parse_set(spec, opt.set_regex)));
        if (stable->parsed())
            return exit_bool(is_stable(spec, parse_set(spec, opt.set_regex)));
        if (complete->parsed())
            return exit_bool(
                is_complete(spec, parse_set(spec, opt.set_regex)));
        if (acceptable->parsed()) {
            afreg::Dfa s = opt.set_regex.empty()
                               ? afreg::Dfa::empty_language(spec.alphabet())
                               : parse_set(spec, opt.set_regex);
            return exit_bool(is_acceptable(
                spec, parse_word(spec.alphabet(), opt.arg_word), s));
        }
        if (character->parsed()) {
            emit_set(characteristic(spec, parse_set(spec, opt.set_regex)),
                     opt);
            return kExitTrue;
        }
        if (ground->parsed()) return run_grounded(spec, opt);
        if (sd_stable->parsed())
            return run_semidecision(
                stable_empty_semidecide(spec, opt.budget));
        if (sd_cred->parsed())
            return run_semidecision(no_credulous_admissible(
                spec, parse_words(spec, opt.args_words), opt.budget));
        if (finitary->parsed()) {
            bool sure = finitary_syntactic(spec) ==
                        afreg::FinitaryStatus::Guaranteed;
            std::cout << (sure ? "guaranteed" : "unknown") << '\n';
            return sure ? kExitTrue : kExitUnknown;
        }
        if (enumerate->parsed()) {
            for (const auto& w :
                 spec.arguments().enumerate(opt.max_count, opt.max_len))
                std::cout << render_word(spec.alphabet(), w) << '\n';
            return kExitTrue;
        }
        if (export_cmd->parsed()) {
            afreg::Dfa s = opt.set_regex.empty()
                               ? spec.arguments()
                               : parse_set(spec, opt.set_regex);
            write_output(opt.format == "dot" ? afreg::to_dot(s)
                                             : afreg::to_json(s),
                         opt.out_path);
            return kExitTrue;
        }
        throw afreg::Error("no command dispatched");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
}
