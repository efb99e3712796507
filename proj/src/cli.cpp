#include "trirhombus/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "trirhombus/birational.hpp"
#include "trirhombus/curve.hpp"
#include "trirhombus/generator.hpp"
#include "trirhombus/oracle.hpp"
#include "trirhombus/serialize.hpp"
#include "trirhombus/verify.hpp"

namespace trirhombus::cli {

namespace {

const CLI::Range kAtLeastOne(std::int64_t{1}, std::numeric_limits<std::int64_t>::max(), "INT>=1");

struct GenerateOptions {
    std::int64_t max_multiple = 0;
    bool negatives = false;
    bool torsion = false;
    std::size_t limit = 0;
    std::string format = "json";
};

int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
    GeneratorConfig cfg;
    cfg.max_multiple = opt.max_multiple;
    cfg.include_negatives = opt.negatives;
    cfg.include_torsion = opt.torsion;
    if (opt.limit > 0) cfg.limit = opt.limit;

    const HarvestResult result = harvest(cfg);
    out << (opt.format == "csv" ? to_csv(result.certificates) : to_json_document(result.certificates));

    err << result.certificates.size() << " certificate(s); skipped:";
    for (auto r : {SkipReason::kInfinity, SkipReason::kSingularMap, SkipReason::kOutsideWindow,
                   SkipReason::kDuplicate, SkipReason::kVerifyFailed}) {
        err << ' ' << to_string(r) << '=' << result.count(r);
    }
    err << '\n';
    return kSuccess;
}

int cmd_verify(const std::string& path, std::istream& in, std::ostream& out, std::ostream& err) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << path << '\n';
            return kUsageError;
        }
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }

    std::vector<PairCertificate> certs;
    try {
        certs = parse_certificates(text);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    std::size_t failed = 0;
    for (std::size_t i = 0; i < certs.size(); ++i) {
        const VerificationReport report = verify_certificate(certs[i]);
        out << "certificate " << i + 1 << ": ";
        if (report.passed()) {
            out << "PASS";
        } else {
            ++failed;
            out << "FAIL";
            for (const auto& name : report.failures()) out << ' ' << name;
        }
        if (const auto* minimal = report.find("minimal_scale"); minimal && !minimal->passed) {
            out << " (non-minimal scale)";
        }
        out << '\n';
    }
    out << certs.size() - failed << '/' << certs.size() << " passed\n";
    return failed == 0 ? kSuccess : kVerificationFailed;
}

int cmd_search(std::int64_t max_den, std::ostream& out) {
    const auto solutions = sweep(max_den, 0);
    const auto report = cross_check(solutions);
    out << "u v x y on_curve\n";
    for (const auto& e : report.entries) {
        out << e.solution.u << ' ' << e.solution.v << ' ';
        if (e.image) {
            out << *e.image;
        } else {
            out << "- -";
        }
        out << ' ' << (e.on_curve ? "yes" : "no") << '\n';
    }
    return kSuccess;
}

int cmd_point(std::int64_t multiple, bool add_torsion, std::ostream& out) {
    const Curve& e = curve_E();
    CurvePoint pt = e.scalar_mul(multiple, generator_P());
    if (add_torsion) pt = e.add(pt, torsion_T());
    out << pt << '\n';
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integral right triangle / theta-integral rhombus pairs with common area and perimeter"};
    app.name("trirhombus");
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Harvest certificates from multiples of the generator");
    generate->add_option("--max-multiple", gen.max_multiple, "Largest |m| to walk")
        ->required()
        ->check(kAtLeastOne);
    generate->add_flag("--negatives", gen.negatives, "Also walk -mP");
    generate->add_flag("--torsion", gen.torsion, "Also walk mP + T");
    generate->add_option("--limit", gen.limit, "Stop after this many certificates")->check(kAtLeastOne);
    generate->add_option("--format", gen.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    std::string verify_path = "-";
    auto* verify = app.add_subcommand("verify", "Independently re-check a certificate document");
    verify->add_option("path", verify_path, "Certificate file (JSON or CSV); '-' reads standard input");

    std::int64_t max_den = 0;
    auto* search = app.add_subcommand("search", "Brute-force the biquadratic and map solutions onto E");
    search->add_option("--max-den", max_den, "Largest denominator of u")->required()->check(kAtLeastOne);

    std::int64_t multiple = 0;
    bool add_torsion = false;
    auto* point = app.add_subcommand("point", "Print m*P (+T) on E");
    point->add_option("--multiple", multiple, "The multiple m (any sign)")->required();
    point->add_flag("--add-torsion", add_torsion, "Add the 2-torsion point T");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    try {
        if (*generate) return cmd_generate(gen, out, err);
        if (*verify) return cmd_verify(verify_path, in, out, err);
        if (*search) return cmd_search(max_den, out);
        if (*point) return cmd_point(multiple, add_torsion, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace trirhombus::cli
