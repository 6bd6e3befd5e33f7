#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "bezgw/query.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact Bezout / Grothendieck-Witt calculator for pointed rational functions"};

    bezgw::Query q;
    std::string outputs = "all";
    app.add_option("expr", q.expression, "Rational function, e.g. \"(x^2-1)/2\"")->required();
    app.add_option("--field", q.field_descriptor,
                   "Field descriptor: Q, F<p>, Q[t]/(m), F<p>[t]/(m)")
        ->capture_default_str();
    app.add_option("--outputs", outputs,
                   "Comma list of bez,s,new,van,transitions,gram:<basis>,invariants,"
                   "degree,a1,unstable,verify,cauchy or all")
        ->capture_default_str();
    app.add_option("--roots", q.roots, "Explicit split data as r1:m1,r2:m2,...");
    app.add_flag("--json", q.json, "Emit a single JSON object");

    CLI11_PARSE(app, argc, argv);

    std::stringstream ss(outputs);
    std::string item;
    while (std::getline(ss, item, ',')) q.outputs.push_back(item);

    auto result = bezgw::run(q);
    std::cout << result.output;
    return result.exit_code;
}
