#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hdisc/errors.hpp"
#include "hdisc/report.hpp"

namespace {

using namespace hdisc;

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_edge_list(in);
}

ColoredGraph load_colored(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_colored_edge_list(in);
}

Frame load_frame(const std::string& selector) {
    if (selector.rfind("file:", 0) == 0) {
        std::string path = selector.substr(5);
        return custom_frame(load_colored(path), selector);
    }
    return frame_from_selector(selector);
}

void emit(const Json& j, const std::string& output) {
    std::string text = j.dump(2);
    text.push_back('\n');
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw ParseError("cannot open output " + output);
        out << text;
    }
}

void emit_text(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw ParseError("cannot open output " + output);
        out << text;
    }
}

std::vector<long> parse_sizes(const std::string& csv) {
    std::vector<long> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (cur.empty()) throw ParseError("bad --sizes list");
            out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact H-factor discrepancy thresholds with machine-checkable certificates"};
    app.require_subcommand(1);

    std::string input, output, frame_sel, recipe_name, case_name, eta_str = "1/10", sizes_csv;
    std::string factor_path, host_path;
    long budget = 1000000, m_scale = 0, max_total = 24, cross = 0;
    int k_param = 0;
    bool summary = false, json = false;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("--input,-i", input, "edge-list file for H")->required();
        cmd->add_option("--output,-o", output, "write the report here instead of stdout");
        cmd->add_flag("--json", json, "JSON report (the default)");
        cmd->add_flag("--summary", summary, "human-readable one-pager instead of JSON")
            ->excludes("--json");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full threshold report for H");
    add_common(analyze, true);

    CLI::App* d0 = app.add_subcommand("delta0", "delta0 with witness and K(H)");
    add_common(d0, true);

    CLI::App* tmpl = app.add_subcommand("template", "decide templatehood of a frame for H");
    add_common(tmpl, true);
    tmpl->add_option("--frame", frame_sel, "frame selector or file:PATH.cel")->required();
    tmpl->add_option("--cross", cross,
                     "cross-check against brute force up to this blowup total");

    CLI::App* wit = app.add_subcommand("witness", "constructive template witness");
    add_common(wit, true);
    wit->add_option("--recipe", recipe_name, "witness recipe name")->required();
    wit->add_option("--frame", frame_sel, "frame selector or file:PATH.cel")->required();

    CLI::App* lb = app.add_subcommand("lowerbound", "lower-bound host construction");
    add_common(lb, true);
    lb->add_option("--case", case_name, "construction case name")->required();
    lb->add_option("-m", m_scale, "scale parameter")->required();
    lb->add_option("-k", k_param, "clique size for the C4 cases");

    CLI::App* hs = app.add_subcommand("hstar", "auxiliary complete r-partite graph");
    add_common(hs, true);
    hs->add_option("--eta", eta_str, "precision parameter P/Q");

    CLI::App* orc = app.add_subcommand("oracle", "brute-force ground truth");
    orc->require_subcommand(1);
    CLI::App* overify = orc->add_subcommand("verify", "check an explicit factor");
    overify->set_help_flag("--help", "print help");
    overify->add_option("--h", input, "edge-list file for H")->required();
    overify->add_option("--host", host_path, "colored edge-list host")->required();
    overify->add_option("--factor", factor_path, "factor JSON")->required();
    overify->add_option("--output,-o", output, "write the report here");
    CLI::App* ofactors = orc->add_subcommand("factors", "discrepancy multiset of a host");
    ofactors->set_help_flag("--help", "print help");
    ofactors->add_option("--h", input, "edge-list file for H")->required();
    ofactors->add_option("--host", host_path, "colored edge-list host")->required();
    ofactors->add_option("--budget", budget, "search-node budget");
    ofactors->add_option("--output,-o", output, "write the report here");
    CLI::App* otmpl = orc->add_subcommand("template", "exhaustive template search");
    otmpl->set_help_flag("--help", "print help");
    otmpl->add_option("--h", input, "edge-list file for H")->required();
    otmpl->add_option("--frame", frame_sel, "frame selector or file:PATH.cel")->required();
    otmpl->add_option("--max-total", max_total, "largest blowup total to try");
    otmpl->add_option("--sizes", sizes_csv, "check one specific blowup instead");
    otmpl->add_option("--output,-o", output, "write the report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) {
            ThresholdReport rep = delta_star(load_graph(input));
            if (summary) emit_text(summary_text(rep), output);
            else emit(to_json(rep), output);
        } else if (*d0) {
            emit(to_json(delta0(load_graph(input))), output);
        } else if (*tmpl) {
            Graph h = load_graph(input);
            Frame f = load_frame(frame_sel);
            TemplateDecision dec = is_template(f, h);
            Json j = to_json(dec);
            if (cross > 0) {
                BruteforceTemplateResult bf = bruteforce_is_template(f, h, cross);
                if (bf.found && !dec.is_template)
                    throw LpOracleMismatch("brute force found a two-discrepancy blowup of " +
                                           f.name + " that the program calls a non-template");
                j["cross_check"] = Json{{"max_total", cross},
                                        {"witness_found", bf.found},
                                        {"conclusive", bf.found == dec.is_template}};
            }
            emit(j, output);
        } else if (*wit) {
            Graph h = load_graph(input);
            WitnessResult res =
                template_witness(witness_recipe_from_string(recipe_name), h, load_frame(frame_sel));
            emit(to_json(res), output);
        } else if (*lb) {
            Graph h = load_graph(input);
            LowerBoundResult res =
                lower_bound_construction(h, lower_bound_case_from_string(case_name), m_scale,
                                         k_param);
            emit(to_json(res), output);
        } else if (*hs) {
            emit(to_json(build_h_star(load_graph(input), rat_from_string(eta_str))), output);
        } else if (*orc) {
            Graph h = load_graph(input);
            ColoredGraph host;
            if (*overify || *ofactors) host = load_colored(host_path);
            if (*overify) {
                std::ifstream fin(factor_path);
                if (!fin) throw ParseError("cannot open " + factor_path);
                Json j = Json::parse(fin, nullptr, true);
                emit(to_json(verify_factor(h, host, factor_from_json(j))), output);
            } else if (*ofactors) {
                emit(to_json(discrepancy_multiset(h, host, budget)), output);
            } else {
                Frame f = load_frame(frame_sel);
                if (!sizes_csv.empty()) {
                    Blowup b = expand({f, parse_sizes(sizes_csv)});
                    emit(to_json(discrepancy_multiset(h, b.colored, budget)), output);
                } else {
                    emit(to_json(bruteforce_is_template(f, h, max_total)), output);
                }
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ContractViolation& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 3;
    } catch (const LpOracleMismatch& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return 4;
    } catch (const Json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
