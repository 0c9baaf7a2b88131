#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "abelian/errors.hpp"
#include "fermat/homology_model.hpp"
#include "koszul/cohomology.hpp"
#include "snake/brauer_fixture.hpp"
#include "snake/ladder.hpp"
#include "torsor/period.hpp"

namespace {

using abelian::Int;
using abelian::Json;

enum class Format { json, csv, text };

struct Options {
    Format format = Format::text;
    std::string out_path;
    long budget = fermat::kDefaultEnumerationBudget;
    int parallel = 1;
};

void add_format_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{
                {"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}},
            CLI::ignore_case));
    cmd->add_option("--out", opt.out_path, "write output to this file instead of stdout");
}

void emit(const Options& opt, const std::string& content) {
    if (opt.out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw abelian::PreconditionError("cannot open output file " + opt.out_path);
    out << content;
}

std::string factors_text(const std::vector<Int>& factors) {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); i++) {
        if (i) os << " x ";
        if (factors[i] == 0) os << "Z";
        else os << "Z/" << factors[i];
    }
    return os.str();
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void reject_csv(const std::string& command) {
    throw UsageError("--format csv is not available for '" + command + "'");
}

std::string render_certificates(const std::vector<torsor::PeriodCertificate>& certs,
                                Format format, bool single) {
    if (format == Format::csv) {
        std::ostringstream os;
        os << torsor::certificate_csv_header() << "\n";
        for (const auto& c : certs) os << torsor::certificate_csv_row(c) << "\n";
        return os.str();
    }
    if (format == Format::json) {
        if (single) return abelian::dump_json(torsor::encode_certificate(certs[0]));
        Json rows = Json::array();
        for (const auto& c : certs) rows.push_back(torsor::encode_certificate(c));
        return abelian::dump_json(rows);
    }
    std::ostringstream os;
    for (const auto& c : certs) {
        os << "m = " << c.m << "\n"
           << "  period                 = " << c.period << "\n"
           << "  invariants             = " << factors_text(c.invariants_factors) << "\n"
           << "  degree image generator = " << c.degree_image_generator << "\n"
           << "  torsor group           = " << factors_text(c.torsor_group_factors) << "\n"
           << "  section classes        = " << c.section_classes << "\n"
           << "  image index            = " << c.image_index << "\n"
           << "  enumeration oracle     = " << (c.oracle_checked ? "checked" : "skipped (budget)")
           << "\n";
    }
    return os.str();
}

std::string render_model(const fermat::FermatHomologyModel& model, Format format) {
    Json report = fermat::model_report(model);
    if (format == Format::json) return abelian::dump_json(report);
    std::ostringstream os;
    os << "m = " << model.m << "\n"
       << "  ambient          = " << factors_text(model.ambient.invariant_factors()) << "\n"
       << "  open order       = " << report["open_order"].get<std::string>() << "\n"
       << "  boundary order   = " << report["boundary_order"].get<std::string>() << "\n"
       << "  closed quotient  = "
       << factors_text(model.closed_quotient.group.invariant_factors()) << "\n"
       << "  invariants       = "
       << factors_text(fermat::invariants_group(model).invariant_factors()) << "\n";
    return os.str();
}

Json cohomology_json(int m, int level, const koszul::Cohomology& h) {
    Json j;
    j["m"] = m;
    j["level"] = level;
    j["h0"] = abelian::encode_factors(h.h0.invariant_factors());
    j["h1"] = abelian::encode_factors(h.h1.invariant_factors());
    j["h2"] = abelian::encode_factors(h.h2.invariant_factors());
    return j;
}

koszul::Cohomology cohomology_at(int m, int level) {
    fermat::FermatHomologyModel model = fermat::build_model(m, level);
    koszul::ModuleWithAction module{model.closed_quotient.group, model.sigma, model.tau};
    return koszul::koszul_cohomology(module);
}

std::string render_six_term(const snake::SixTermSequence& six, Format format) {
    if (format == Format::json) return abelian::dump_json(snake::encode_six_term(six));
    static const char* names[] = {"ker left    ", "ker middle  ", "ker right   ",
                                  "coker left  ", "coker middle", "coker right "};
    std::ostringstream os;
    for (int i = 0; i < 6; i++)
        os << names[i] << " = " << factors_text(six.terms[i].invariant_factors()) << "\n";
    os << "interior exactness verified; " << six.witnesses.size()
       << " connecting witness(es) recorded\n";
    return os.str();
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact computations for the degree-m family: homology model, monodromy "
                 "invariants, two-variable cohomology, snake chases, torsor periods"};
    app.require_subcommand(1);

    Options opt;
    int m = 0, level = 0, m_to = 0;
    long prime = 0;
    int exponent = 0;
    bool brute_force = false, sweep = false;
    std::string ladder_path;

    CLI::App* period = app.add_subcommand("period", "torsor period certificate for one degree");
    period->add_option("M", m, "degree")->required();
    period->add_option("--budget", opt.budget, "enumeration budget")
        ->check(CLI::NonNegativeNumber);
    add_format_flags(period, opt);

    CLI::App* table = app.add_subcommand("table", "period certificates over a degree range");
    table->add_option("--from", m, "first degree")->required();
    table->add_option("--to", m_to, "last degree")->required();
    table->add_option("--budget", opt.budget, "enumeration budget")
        ->check(CLI::NonNegativeNumber);
    table->add_option("--parallel", opt.parallel, "max concurrent rows")
        ->check(CLI::PositiveNumber);
    add_format_flags(table, opt);

    CLI::App* invariants =
        app.add_subcommand("invariants", "monodromy invariants of the closed quotient");
    invariants->add_option("M", m, "degree")->required();
    invariants->add_flag("--brute-force", brute_force,
                         "also run the exhaustive scan and compare");
    invariants->add_option("--budget", opt.budget, "enumeration budget")
        ->check(CLI::NonNegativeNumber);
    add_format_flags(invariants, opt);

    CLI::App* homology = app.add_subcommand("homology", "homology model orders and factors");
    homology->add_option("M", m, "degree")->required();
    add_format_flags(homology, opt);

    CLI::App* cohomology =
        app.add_subcommand("cohomology", "two-variable cohomology of the degree-m module");
    cohomology->add_option("M", m, "degree")->required();
    cohomology->add_option("--level", level, "coefficient level (default: M)");
    cohomology->add_flag("--sweep", sweep, "report all levels 2..N instead of level N alone");
    add_format_flags(cohomology, opt);

    CLI::App* snake_cmd = app.add_subcommand("snake", "six-term sequence of a ladder file");
    snake_cmd->add_option("--ladder", ladder_path, "ladder json file")
        ->required()
        ->check(CLI::ExistingFile);
    add_format_flags(snake_cmd, opt);

    CLI::App* fixture = app.add_subcommand(
        "fixture-brauer", "comparison ladder for degree M at level L^R, with its six terms");
    fixture->add_option("M", m, "degree")->required();
    fixture->add_option("L", prime, "prime")->required();
    fixture->add_option("R", exponent, "level exponent")->required();
    add_format_flags(fixture, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (period->parsed()) {
        auto cert = torsor::compute_period(m, opt.budget);
        emit(opt, render_certificates({cert}, opt.format, /*single=*/true));
        return 0;
    }

    if (table->parsed()) {
        auto rows = torsor::period_table(m, m_to, opt.budget, opt.parallel);
        emit(opt, render_certificates(rows, opt.format, /*single=*/false));
        return 0;
    }

    if (invariants->parsed()) {
        fermat::FermatHomologyModel model = fermat::build_model(m);
        abelian::FgAbelianGroup inv = fermat::invariants_group(model);
        bool checked = false;
        if (brute_force) {
            abelian::FgAbelianGroup scanned = fermat::invariants_bruteforce(model, opt.budget);
            if (scanned.invariant_factors() != inv.invariant_factors())
                throw abelian::InternalError(
                    "exhaustive scan disagrees with the invariants computation");
            checked = true;
        }
        if (opt.format == Format::csv) reject_csv("invariants");
        if (opt.format == Format::json) {
            Json j;
            j["m"] = m;
            j["invariants_factors"] = abelian::encode_factors(inv.invariant_factors());
            j["order"] = inv.order().get_str();
            j["verified_by_enumeration"] = checked;
            emit(opt, abelian::dump_json(j));
        } else {
            std::ostringstream os;
            os << "m = " << m << "\n"
               << "  invariants = " << factors_text(inv.invariant_factors()) << "\n"
               << "  order      = " << inv.order() << "\n"
               << "  exhaustive scan = " << (checked ? "agrees" : "not run") << "\n";
            emit(opt, os.str());
        }
        return 0;
    }

    if (homology->parsed()) {
        if (opt.format == Format::csv) reject_csv("homology");
        emit(opt, render_model(fermat::build_model(m), opt.format));
        return 0;
    }

    if (cohomology->parsed()) {
        if (opt.format == Format::csv) reject_csv("cohomology");
        if (level == 0) level = m;
        if (sweep) {
            Json levels = Json::array();
            std::ostringstream os;
            for (int n = 2; n <= level; n++) {
                koszul::Cohomology h = cohomology_at(m, n);
                levels.push_back(cohomology_json(m, n, h));
                os << "level " << n << ": |h0| = " << h.h0.order()
                   << ", |h1| = " << h.h1.order() << ", |h2| = " << h.h2.order() << "\n";
            }
            if (opt.format == Format::json) {
                Json j;
                j["m"] = m;
                j["levels"] = levels;
                emit(opt, abelian::dump_json(j));
            } else {
                emit(opt, os.str());
            }
            return 0;
        }
        koszul::Cohomology h = cohomology_at(m, level);
        if (opt.format == Format::json) {
            emit(opt, abelian::dump_json(cohomology_json(m, level, h)));
        } else {
            std::ostringstream os;
            os << "m = " << m << ", level = " << level << "\n"
               << "  h0 = " << factors_text(h.h0.invariant_factors()) << "\n"
               << "  h1 = " << factors_text(h.h1.invariant_factors()) << "\n"
               << "  h2 = " << factors_text(h.h2.invariant_factors()) << "\n";
            emit(opt, os.str());
        }
        return 0;
    }

    if (snake_cmd->parsed()) {
        if (opt.format == Format::csv) reject_csv("snake");
        std::ifstream in(ladder_path, std::ios::binary);
        if (!in) throw abelian::PreconditionError("cannot open ladder file " + ladder_path);
        Json parsed = Json::parse(in); // parse errors map to a usage failure
        snake::LadderDiagram ladder = snake::decode_ladder(parsed);
        snake::SixTermSequence six = snake::snake(ladder);
        emit(opt, render_six_term(six, opt.format));
        return 0;
    }

    if (fixture->parsed()) {
        if (opt.format == Format::csv) reject_csv("fixture-brauer");
        snake::LadderDiagram ladder = snake::fermat_brauer_ladder(m, prime, exponent);
        snake::SixTermSequence six = snake::snake(ladder);
        if (opt.format == Format::json) {
            Json j;
            j["m"] = m;
            j["l"] = prime;
            j["r"] = exponent;
            j["ladder"] = snake::encode_ladder(ladder);
            j["six_term"] = snake::encode_six_term(six);
            emit(opt, abelian::dump_json(j));
        } else {
            std::ostringstream os;
            os << "degree " << m << " at level " << prime << "^" << exponent << "\n";
            os << render_six_term(six, Format::text);
            emit(opt, os.str());
        }
        return 0;
    }

    return 0; // unreachable: a subcommand is required
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const abelian::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const abelian::PreconditionError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 3;
    } catch (const abelian::InternalError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 5;
    } catch (const Json::parse_error& e) {
        std::cerr << "malformed json: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
