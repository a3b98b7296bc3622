// Command-line front end for the exact piecewise-linear quasi-isometry
// toolkit. Exit codes: 0 success/true/accepted, 1 false/rejected/kernel,
// 2 parse or validation error.

#include "plqi/certificate.hpp"
#include "plqi/documents.hpp"
#include "plqi/qi.hpp"
#include "plqi/structure.hpp"
#include "plqi/witness.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace plqi;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

PLMap load_map(const std::string& path) {
    return parse_map(read_file(path));
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write file '" + out_path + "'");
    out << content;
}

std::string render_csv(const NonCentralityCertificate& cert) {
    std::string csv = "k,t,displacement\n";
    for (std::size_t k = 0; k < cert.samples.size(); ++k) {
        csv += std::to_string(k + 1);
        csv += ',';
        csv += format_rational(cert.samples[k].t);
        csv += ',';
        csv += format_rational(cert.samples[k].displacement);
        csv += '\n';
    }
    return csv;
}

std::string format_fixed(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value);
    return buffer;
}

std::string render_svg(const NonCentralityCertificate& cert) {
    constexpr double width = 640;
    constexpr double height = 400;
    constexpr double margin = 40;
    double max_displacement = 0;
    for (const DisplacementSample& sample : cert.samples) {
        double d = sample.displacement.convert_to<double>();
        if (d > max_displacement)
            max_displacement = d;
    }
    if (max_displacement <= 0)
        max_displacement = 1;
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
           "viewBox=\"0 0 640 400\">\n";
    svg += "<line x1=\"40\" y1=\"360\" x2=\"600\" y2=\"360\" stroke=\"#888\"/>\n";
    svg += "<line x1=\"40\" y1=\"40\" x2=\"40\" y2=\"360\" stroke=\"#888\"/>\n";
    svg += "<polyline fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"2\" points=\"";
    const std::size_t n = cert.samples.size();
    for (std::size_t k = 0; k < n; ++k) {
        double x = n > 1 ? margin + static_cast<double>(k) * (width - 2 * margin) /
                                        static_cast<double>(n - 1)
                         : width / 2;
        double d = cert.samples[k].displacement.convert_to<double>();
        double y = height - margin - d / max_displacement * (height - 2 * margin);
        if (k)
            svg += ' ';
        svg += format_fixed(x);
        svg += ',';
        svg += format_fixed(y);
    }
    svg += "\"/>\n</svg>\n";
    return svg;
}

std::string end_name(DivergentEnd end) {
    switch (end) {
        case DivergentEnd::plus_infinity:
            return "+inf";
        case DivergentEnd::minus_infinity:
            return "-inf";
        case DivergentEnd::both:
            return "both";
    }
    return "?";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for piecewise-linear self-maps of the line and their "
                 "quasi-isometry classes"};
    app.require_subcommand(1);

    std::string f_path;
    std::string g_path;
    std::string t_text;
    std::string out_path;
    std::string cert_path;
    std::string bound_text = "0";
    std::size_t count = 4;

    auto add_map_option = [&](CLI::App* cmd) {
        cmd->add_option("-f", f_path, "map document (JSON)")->required();
    };
    auto add_out_option = [&](CLI::App* cmd) {
        cmd->add_option("-o", out_path, "output file (default stdout)");
    };

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate the map at a rational point");
    add_map_option(eval_cmd);
    eval_cmd->add_option("-t", t_text, "rational point")->required();

    CLI::App* compose_cmd = app.add_subcommand("compose", "compose two maps (f after g)");
    add_map_option(compose_cmd);
    compose_cmd->add_option("-g", g_path, "second map document")->required();
    add_out_option(compose_cmd);

    CLI::App* invert_cmd = app.add_subcommand("invert", "invert a map");
    add_map_option(invert_cmd);
    add_out_option(invert_cmd);

    CLI::App* canon_cmd = app.add_subcommand("canon", "canonicalize a map document");
    add_map_option(canon_cmd);
    add_out_option(canon_cmd);

    CLI::App* slopes_cmd = app.add_subcommand("slopes", "slope set, break points, bound");
    add_map_option(slopes_cmd);
    add_out_option(slopes_cmd);

    CLI::App* qi_const_cmd =
        app.add_subcommand("qi-const", "bi-Lipschitz quasi-isometry constant");
    add_map_option(qi_const_cmd);

    CLI::App* equivalent_cmd =
        app.add_subcommand("equivalent", "decide whether two maps are boundedly close");
    add_map_option(equivalent_cmd);
    equivalent_cmd->add_option("-g", g_path, "second map document")->required();

    CLI::App* kernel_cmd =
        app.add_subcommand("kernel", "is the map boundedly close to the identity?");
    add_map_option(kernel_cmd);

    CLI::App* ends_cmd = app.add_subcommand("ends", "does the map fix or swap the two ends?");
    add_map_option(ends_cmd);

    CLI::App* normalize_cmd = app.add_subcommand("normalize", "translate so the map fixes 0");
    add_map_option(normalize_cmd);
    add_out_option(normalize_cmd);

    CLI::App* split_orientation_cmd = app.add_subcommand(
        "split-orientation", "factor into an orientation-preserving part and a reflection");
    add_map_option(split_orientation_cmd);
    add_out_option(split_orientation_cmd);

    CLI::App* split_pm_cmd = app.add_subcommand(
        "split-pm", "factor into parts supported on the two half-lines");
    add_map_option(split_pm_cmd);
    add_out_option(split_pm_cmd);

    CLI::App* rho_conj_cmd =
        app.add_subcommand("rho-conj", "conjugate by the reflection: t -> -f(-t)");
    add_map_option(rho_conj_cmd);
    add_out_option(rho_conj_cmd);

    CLI::App* classify_cmd = app.add_subcommand("classify", "membership flags");
    add_map_option(classify_cmd);
    add_out_option(classify_cmd);

    CLI::App* extract_seq_cmd =
        app.add_subcommand("extract-seq", "greedy divergent sequence for the map");
    add_map_option(extract_seq_cmd);
    extract_seq_cmd->add_option("-n", count, "terms to materialize (min 4)");
    add_out_option(extract_seq_cmd);

    CLI::App* certify_cmd =
        app.add_subcommand("certify", "produce a non-centrality certificate");
    add_map_option(certify_cmd);
    certify_cmd->add_option("-n", count, "number of displacement samples");
    add_out_option(certify_cmd);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "independently check a certificate");
    verify_cmd->add_option("-c", cert_path, "certificate document")->required();
    verify_cmd->add_option("--bound", bound_text,
                           "displacement bound the certificate must beat");

    CLI::App* plot_cmd =
        app.add_subcommand("plot", "export certificate samples as CSV or SVG");
    plot_cmd->add_option("-c", cert_path, "certificate document")->required();
    add_out_option(plot_cmd);

    int exit_code = 0;

    eval_cmd->callback([&] {
        PLMap f = load_map(f_path);
        std::cout << format_rational(f(parse_rational(t_text))) << "\n";
    });
    compose_cmd->callback([&] {
        write_output(out_path, emit_map(compose(load_map(f_path), load_map(g_path))));
    });
    invert_cmd->callback([&] { write_output(out_path, emit_map(invert(load_map(f_path)))); });
    canon_cmd->callback([&] { write_output(out_path, emit_map(load_map(f_path))); });
    slopes_cmd->callback([&] {
        write_output(out_path, emit_document(slope_summary_to_json(slope_summary(load_map(f_path)))));
    });
    qi_const_cmd->callback([&] {
        std::cout << format_rational(qi_parameters(load_map(f_path)).K) << "\n";
    });
    equivalent_cmd->callback([&] {
        DifferenceVerdict verdict = sup_difference(load_map(f_path), load_map(g_path));
        if (verdict.bounded) {
            std::cout << "bounded sup=" << format_rational(*verdict.sup) << "\n";
        } else {
            std::cout << "unbounded end=" << end_name(*verdict.divergent_end) << "\n";
            exit_code = 1;
        }
    });
    kernel_cmd->callback([&] {
        const bool inside = in_kernel(load_map(f_path));
        std::cout << (inside ? "true" : "false") << "\n";
        exit_code = inside ? 0 : 1;
    });
    ends_cmd->callback([&] {
        std::cout << (end_action(load_map(f_path)) == EndAction::fix ? "fix" : "swap") << "\n";
    });
    normalize_cmd->callback(
        [&] { write_output(out_path, emit_map(normalize_at_zero(load_map(f_path)))); });
    split_orientation_cmd->callback([&] {
        write_output(out_path,
                     emit_document(orientation_split_to_json(split_orientation(load_map(f_path)))));
    });
    split_pm_cmd->callback([&] {
        write_output(out_path,
                     emit_document(plus_minus_split_to_json(plus_minus_split(load_map(f_path)))));
    });
    rho_conj_cmd->callback(
        [&] { write_output(out_path, emit_map(rho_conjugate(load_map(f_path)))); });
    classify_cmd->callback([&] {
        write_output(out_path, emit_document(membership_to_json(classify_membership(load_map(f_path)))));
    });
    extract_seq_cmd->callback([&] {
        write_output(out_path,
                     emit_document(sequence_to_json(extract_divergent_sequence(load_map(f_path), count))));
    });
    certify_cmd->callback([&] {
        CertifyResult result = certify_noncentral(load_map(f_path), count);
        if (const auto* cert = std::get_if<NonCentralityCertificate>(&result)) {
            write_output(out_path, emit_certificate(*cert));
        } else {
            write_output(out_path, emit_document(kernel_report_to_json(std::get<KernelReport>(result))));
            exit_code = 1;
        }
    });
    verify_cmd->callback([&] {
        NonCentralityCertificate cert = parse_certificate(read_file(cert_path));
        VerificationResult result = verify_certificate(cert, parse_rational(bound_text));
        if (result.accepted) {
            std::cout << "accepted\n";
        } else {
            std::cout << "rejected(" << result.reason << ")\n";
            exit_code = 1;
        }
    });
    plot_cmd->callback([&] {
        NonCentralityCertificate cert = parse_certificate(read_file(cert_path));
        const bool svg = out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".svg";
        write_output(out_path, svg ? render_svg(cert) : render_csv(cert));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
