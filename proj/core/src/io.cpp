#include "graphon/io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace graphon {

namespace {

using nlohmann::json;

/// Canonical dump: std::map key order (lexicographic), %.17g floats.
void dump_canonical(const json& j, std::string& out) {
    switch (j.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += json(it.key()).dump();
                out += ':';
                dump_canonical(it.value(), out);
            }
            out += '}';
            break;
        }
        case json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                dump_canonical(j[i], out);
            }
            out += ']';
            break;
        }
        case json::value_t::number_float: {
            double v = j.get<double>();
            if (!std::isfinite(v))
                throw validation_error("refusing to write non-finite number");
            out += format_double17(v);
            break;
        }
        default:
            out += j.dump();
            break;
    }
}

std::string dump_canonical(const json& j) {
    std::string out;
    dump_canonical(j, out);
    out += '\n';
    return out;
}

json parse(const std::string& bytes) {
    json j = json::parse(bytes, nullptr, false);
    if (j.is_discarded()) throw validation_error("input is not valid JSON");
    return j;
}

json graphon_to_json(const MultipodalGraphon& g) {
    json j;
    j["format_version"] = 1;
    j["c"] = json::array();
    for (int i = 0; i < g.pod_count(); ++i) j["c"].push_back(g.pods[i]);
    j["p"] = json::array();
    for (int i = 0; i < g.pod_count(); ++i) {
        json row = json::array();
        for (int k = 0; k < g.pod_count(); ++k) row.push_back(g.values(i, k));
        j["p"].push_back(row);
    }
    return j;
}

}  // namespace

std::string format_double17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

GraphonDocument read_graphon_document(const std::string& bytes, bool strict) {
    json j = parse(bytes);
    if (!j.is_object()) throw validation_error("graphon document must be a JSON object");
    if (!j.contains("c") || !j.contains("p"))
        throw validation_error("graphon document requires keys \"c\" and \"p\"");

    GraphonDocument doc;
    json extras = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key == "c" || key == "p") continue;
        if (key == "format_version") {
            if (!it.value().is_number_integer())
                throw validation_error("format_version must be an integer");
            doc.format_version = it.value().get<int>();
        } else if (key == "label" || key == "provenance") {
            if (!it.value().is_string())
                throw validation_error(key + " must be a string");
            (key == "label" ? doc.label : doc.provenance) = it.value().get<std::string>();
        } else if (strict) {
            throw validation_error("unknown field \"" + key + "\" (strict mode)");
        } else {
            extras[key] = it.value();
        }
    }
    if (!extras.empty()) doc.extra_fields = extras.dump();

    const json& cj = j["c"];
    const json& pj = j["p"];
    if (!cj.is_array() || cj.empty()) throw validation_error("\"c\" must be a non-empty array");
    const int m = static_cast<int>(cj.size());
    Eigen::VectorXd c(m);
    for (int i = 0; i < m; ++i) {
        if (!cj[i].is_number())
            throw validation_error("c[" + std::to_string(i) + "] is not a number");
        c[i] = cj[i].get<double>();
    }
    if (!pj.is_array() || static_cast<int>(pj.size()) != m)
        throw validation_error("\"p\" must be an array of " + std::to_string(m) + " rows");
    Eigen::MatrixXd p(m, m);
    for (int i = 0; i < m; ++i) {
        if (!pj[i].is_array() || static_cast<int>(pj[i].size()) != m)
            throw validation_error("p[" + std::to_string(i) + "] must have " +
                                   std::to_string(m) + " entries");
        for (int k = 0; k < m; ++k) {
            if (!pj[i][k].is_number())
                throw validation_error("p[" + std::to_string(i) + "][" + std::to_string(k) +
                                       "] is not a number");
            p(i, k) = pj[i][k].get<double>();
        }
    }

    // symmetrize only within the 1e-12 budget, else reject naming the pair
    for (int i = 0; i < m; ++i)
        for (int k = i + 1; k < m; ++k) {
            double asym = std::abs(p(i, k) - p(k, i));
            if (asym > 1e-12)
                throw validation_error("p[" + std::to_string(i) + "][" + std::to_string(k) +
                                       "] differs from p[" + std::to_string(k) + "][" +
                                       std::to_string(i) + "] by " + format_double17(asym) +
                                       " (max 1e-12)");
            double v = 0.5 * (p(i, k) + p(k, i));
            p(i, k) = p(k, i) = v;
        }

    doc.graphon = make_graphon(std::move(c), std::move(p));
    return doc;
}

MultipodalGraphon read_graphon(const std::string& bytes, bool strict) {
    return read_graphon_document(bytes, strict).graphon;
}

std::string write_graphon(const MultipodalGraphon& g, const std::optional<std::string>& label) {
    validate(g);
    json j = graphon_to_json(g);
    if (label) j["label"] = *label;
    return dump_canonical(j);
}

std::string write_graphon_document(const GraphonDocument& doc) {
    validate(doc.graphon);
    json j = graphon_to_json(doc.graphon);
    j["format_version"] = doc.format_version;
    if (doc.label) j["label"] = *doc.label;
    if (doc.provenance) j["provenance"] = *doc.provenance;
    if (!doc.extra_fields.empty()) {
        json extras = parse(doc.extra_fields);
        for (auto it = extras.begin(); it != extras.end(); ++it) j[it.key()] = it.value();
    }
    return dump_canonical(j);
}

std::string write_report(const DensityReport& report, const Spectrum* spectral,
                         const std::vector<double>* moments,
                         std::optional<double> moment_center) {
    json j;
    j["edge"] = report.edge;
    j["triangle"] = report.triangle;
    j["entropy"] = report.entropy;
    j["degrees"] = json::array();
    for (int i = 0; i < report.degrees.size(); ++i) j["degrees"].push_back(report.degrees[i]);
    j["two_star"] = report.two_star;
    j["order_q"] = report.order_q;
    if (spectral) {
        json s;
        s["center"] = spectral->center;
        s["eigenvalues"] = json::array();
        for (int i = 0; i < spectral->eigenvalues.size(); ++i)
            s["eigenvalues"].push_back(spectral->eigenvalues[i]);
        s["eigvec_pod_values"] = json::array();
        for (int i = 0; i < spectral->eigvec_pod_values.rows(); ++i) {
            json row = json::array();
            for (int k = 0; k < spectral->eigvec_pod_values.cols(); ++k)
                row.push_back(spectral->eigvec_pod_values(i, k));
            s["eigvec_pod_values"].push_back(row);
        }
        j["spectral"] = s;
    }
    if (moments) {
        json m;
        m["center"] = moment_center.value_or(0.5);
        m["values"] = json::array();
        for (double v : *moments) m["values"].push_back(v);
        j["moments"] = m;
    }
    return dump_canonical(j);
}

std::string write_result(const OptimizerResult& result) {
    json j;
    j["graphon"] = parse(write_graphon(result.graphon));
    j["achieved_e"] = result.achieved_e;
    j["achieved_t"] = result.achieved_t;
    j["entropy"] = result.entropy;
    j["lambda_e"] = result.lambda_e;
    j["lambda_t"] = result.lambda_t;
    if (std::isfinite(result.el_residual))
        j["el_residual"] = result.el_residual;
    else
        j["el_residual"] = nullptr;  // degenerate certificate (all blocks saturated)
    j["classification"] = to_string(result.classification, result.class_pods);
    j["pods_used"] = result.graphon.pod_count();
    j["restarts_converged"] = result.restarts_converged;
    j["restarts_agreeing"] = result.restarts_agreeing;
    j["converged"] = result.converged;
    return dump_canonical(j);
}

std::string write_verify(const VerifyReport& report) {
    // undefined measurements (e.g. a scaling ratio when no margin exists) are
    // carried as NaN internally and rendered as null
    auto num_or_null = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
    json j;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["passed"] = report.passed();
    j["failed"] = report.failed();
    j["cases"] = json::array();
    for (const auto& c : report.cases) {
        json cj;
        cj["name"] = c.name;
        json inputs = json::object();
        for (const auto& [k, v] : c.inputs) inputs[k] = num_or_null(v);
        cj["inputs"] = inputs;
        cj["measured"] = num_or_null(c.measured);
        cj["expected"] = num_or_null(c.expected);
        cj["tolerance"] = num_or_null(c.tolerance);
        cj["pass"] = c.pass;
        if (!c.note.empty()) cj["note"] = c.note;
        j["cases"].push_back(cj);
    }
    return dump_canonical(j);
}

}  // namespace graphon
