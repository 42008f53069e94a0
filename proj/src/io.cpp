#include "framekit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace framekit {

namespace {

using nlohmann::json;

std::string fmt_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

DocKind kind_from_name(const std::string& name) {
    if (name == "vector_frame")
        return DocKind::VectorFrame;
    if (name == "fusion_system")
        return DocKind::FusionSystem;
    if (name == "operator")
        return DocKind::Operator;
    throw ParseError("unknown document kind: " + name);
}

double number_at(const json& j, const char* what) {
    if (!j.is_number())
        throw ParseError(std::string("expected a number for ") + what);
    const double x = j.get<double>();
    if (!std::isfinite(x))
        throw ParseError(std::string("non-finite number in ") + what);
    return x;
}

Complex entry_at(const json& j, Field field) {
    if (field == Field::Real)
        return Complex(number_at(j, "a real entry"), 0.0);
    if (!j.is_array() || j.size() != 2)
        throw ParseError("complex entries must be [re, im] pairs");
    return Complex(number_at(j[0], "a complex entry"), number_at(j[1], "a complex entry"));
}

Mat matrix_from_json(const json& j, Field field) {
    if (!j.is_array() || j.empty())
        throw ParseError("a matrix must be a nonempty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    for (const json& row : j)
        if (!row.is_array() || row.size() != cols)
            throw ParseError("matrix rows must be arrays of equal length");
    Mat m(rows, cols, field);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = entry_at(j[r][c], field);
    return m;
}

void write_matrix(std::ostringstream& out, const Mat& m, Field field) {
    out << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r)
            out << ", ";
        out << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                out << ", ";
            const Complex z = m(r, c);
            if (field == Field::Real)
                out << fmt_number(z.real());
            else
                out << '[' << fmt_number(z.real()) << ", " << fmt_number(z.imag()) << ']';
        }
        out << ']';
    }
    out << ']';
}

} // namespace

std::string kind_name(DocKind kind) {
    switch (kind) {
    case DocKind::VectorFrame:
        return "vector_frame";
    case DocKind::FusionSystem:
        return "fusion_system";
    case DocKind::Operator:
        return "operator";
    }
    return "operator";
}

void SystemDocument::validate() const {
    if (schema_version != 1)
        throw ParseError("unsupported schema_version");
    if (ambient_dim == 0)
        throw ParseError("ambient_dim must be positive");
    if (payload.empty())
        throw ParseError("payload must contain at least one matrix");
    if ((kind == DocKind::FusionSystem) != weights.has_value())
        throw ParseError("weights are present exactly for fusion_system documents");
    for (const Mat& m : payload) {
        if (!m.is_finite())
            throw ParseError("payload entries must be finite");
        if (field == Field::Real && m.field() != Field::Real)
            throw ParseError("real document carries complex entries");
    }
    switch (kind) {
    case DocKind::VectorFrame:
        if (payload.size() != 1 || payload[0].rows() != ambient_dim || payload[0].cols() == 0)
            throw ParseError("vector_frame payload must be one ambient_dim x m matrix, m >= 1");
        break;
    case DocKind::FusionSystem:
        if (weights->size() != payload.size())
            throw ParseError("fusion_system needs one weight per member matrix");
        for (const Mat& m : payload)
            if (m.rows() != ambient_dim || m.cols() > ambient_dim)
                throw ParseError("fusion member matrices must be ambient_dim x k, k <= dim");
        for (double v : *weights)
            if (!(v > 0.0) || !std::isfinite(v))
                throw ParseError("fusion weights must be positive finite numbers");
        break;
    case DocKind::Operator:
        if (payload.size() != 1 || payload[0].rows() != ambient_dim)
            throw ParseError("operator payload must be one matrix with ambient_dim rows");
        break;
    }
}

SystemDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("document must be a JSON object");
    for (const char* key : {"ambient_dim", "field", "kind", "payload", "schema_version"})
        if (!j.contains(key))
            throw ParseError(std::string("missing key: ") + key);

    SystemDocument doc;
    if (!j["schema_version"].is_number_integer())
        throw ParseError("schema_version must be an integer");
    doc.schema_version = j["schema_version"].get<int>();

    const std::string field_name = j["field"].is_string() ? j["field"].get<std::string>() : "";
    if (field_name == "real")
        doc.field = Field::Real;
    else if (field_name == "complex")
        doc.field = Field::Complex;
    else
        throw ParseError("field must be \"real\" or \"complex\"");

    if (!j["ambient_dim"].is_number_integer() || j["ambient_dim"].get<long long>() <= 0)
        throw ParseError("ambient_dim must be a positive integer");
    doc.ambient_dim = j["ambient_dim"].get<std::size_t>();

    doc.kind = kind_from_name(j["kind"].is_string() ? j["kind"].get<std::string>() : "");

    const json& payload = j["payload"];
    if (!payload.is_array())
        throw ParseError("payload must be an array");
    if (doc.kind == DocKind::FusionSystem) {
        for (const json& m : payload)
            doc.payload.push_back(matrix_from_json(m, doc.field));
    } else {
        doc.payload.push_back(matrix_from_json(payload, doc.field));
    }

    if (j.contains("weights")) {
        if (!j["weights"].is_array())
            throw ParseError("weights must be an array");
        std::vector<double> w;
        for (const json& v : j["weights"])
            w.push_back(number_at(v, "weights"));
        doc.weights = std::move(w);
    }

    doc.validate();
    return doc;
}

SystemDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

std::string write_document(const SystemDocument& doc) {
    doc.validate();
    std::ostringstream out;
    out << "{\n";
    out << "  \"ambient_dim\": " << doc.ambient_dim << ",\n";
    out << "  \"field\": \"" << (doc.field == Field::Real ? "real" : "complex") << "\",\n";
    out << "  \"kind\": \"" << kind_name(doc.kind) << "\",\n";
    out << "  \"payload\": ";
    if (doc.kind == DocKind::FusionSystem) {
        out << "[\n";
        for (std::size_t i = 0; i < doc.payload.size(); ++i) {
            out << "    ";
            write_matrix(out, doc.payload[i], doc.field);
            out << (i + 1 < doc.payload.size() ? ",\n" : "\n");
        }
        out << "  ]";
    } else {
        write_matrix(out, doc.payload[0], doc.field);
    }
    out << ",\n";
    out << "  \"schema_version\": " << doc.schema_version;
    if (doc.weights) {
        out << ",\n  \"weights\": [";
        for (std::size_t i = 0; i < doc.weights->size(); ++i) {
            if (i)
                out << ", ";
            out << fmt_number((*doc.weights)[i]);
        }
        out << ']';
    }
    out << "\n}\n";
    return out.str();
}

void save_document(const SystemDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write " + path);
    out << write_document(doc);
}

VectorFrame to_vector_frame(const SystemDocument& doc) {
    doc.validate();
    if (doc.kind != DocKind::VectorFrame)
        throw ParseError("document is not a vector_frame");
    return VectorFrame(doc.ambient_dim, doc.payload[0]);
}

FusionSystem to_fusion_system(const SystemDocument& doc, const Tolerances& tol) {
    doc.validate();
    if (doc.kind != DocKind::FusionSystem)
        throw ParseError("document is not a fusion_system");
    std::vector<WeightedSubspace> members;
    for (std::size_t i = 0; i < doc.payload.size(); ++i)
        members.push_back({Subspace::span(doc.payload[i], tol), (*doc.weights)[i]});
    return FusionSystem(doc.ambient_dim, std::move(members));
}

Mat to_operator(const SystemDocument& doc) {
    doc.validate();
    if (doc.kind != DocKind::Operator)
        throw ParseError("document is not an operator");
    return doc.payload[0];
}

SystemDocument from_vector_frame(const VectorFrame& f) {
    SystemDocument doc;
    doc.field = f.field();
    doc.ambient_dim = f.ambient_dim();
    doc.kind = DocKind::VectorFrame;
    doc.payload.push_back(f.vectors());
    return doc;
}

SystemDocument from_fusion_system(const FusionSystem& w) {
    SystemDocument doc;
    doc.field = w.field();
    doc.ambient_dim = w.ambient_dim();
    doc.kind = DocKind::FusionSystem;
    std::vector<double> weights;
    for (const WeightedSubspace& m : w.members()) {
        Mat basis = m.subspace.basis();
        basis.set_field(w.field());
        doc.payload.push_back(std::move(basis));
        weights.push_back(m.weight);
    }
    doc.weights = std::move(weights);
    return doc;
}

SystemDocument from_operator(const Mat& m, std::size_t ambient_dim) {
    SystemDocument doc;
    doc.field = m.field();
    doc.ambient_dim = ambient_dim;
    doc.kind = DocKind::Operator;
    doc.payload.push_back(m);
    return doc;
}

} // namespace framekit
