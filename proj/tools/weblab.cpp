#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "weblab/pipeline.hpp"

namespace {

int write_output(const weblab::Json& j, const std::string& output) {
    std::string text = j.dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "cannot write " << output << "\n";
            return 1;
        }
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weblab: invariants and rank of planar webs from implicit presentations"};
    std::string subcommand, input, output;
    int order = 0, recheck = 0;
    app.add_option("subcommand", subcommand,
                   "validate | pw | system | connection | curvature | trace-check | rank | "
                   "linearize | full")
        ->required();
    app.add_option("--input", input, "input web document (JSON)")->required();
    app.add_option("--order", order, "working precision override");
    app.add_option("--recheck-order", recheck, "rerun rank decisions at this order and compare");
    app.add_option("--output", output, "write the report here instead of stdout");
    CLI11_PARSE(app, argc, argv);

    weblab::Json error_report;
    try {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "cannot read " << input << "\n";
            return 1;
        }
        weblab::Json j = weblab::Json::parse(in, nullptr, true, true);
        weblab::WebDocument doc = weblab::parse_document(j);
        weblab::RunOptions opts;
        if (order > 0) opts.order_override = order;
        if (recheck > 0) opts.recheck_order = recheck;
        weblab::Json report = weblab::run(subcommand, doc, opts);
        return write_output(report, output);
    } catch (const weblab::Error& e) {
        error_report["errors"] = weblab::Json::array(
            {{{"code", weblab::error_code_name(e.code())}, {"message", e.what()}}});
        write_output(error_report, output);
        return weblab::exit_code_for(e.code());
    } catch (const weblab::Json::exception& e) {
        error_report["errors"] = weblab::Json::array(
            {{{"code", "MalformedInput"}, {"message", e.what()}}});
        write_output(error_report, output);
        return 1;
    } catch (const std::exception& e) {
        error_report["errors"] =
            weblab::Json::array({{{"code", "Internal"}, {"message", e.what()}}});
        write_output(error_report, output);
        return 1;
    }
}
