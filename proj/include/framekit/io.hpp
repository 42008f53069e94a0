#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framekit/fusion.hpp"

namespace framekit {

enum class DocKind { VectorFrame, FusionSystem, Operator };

std::string kind_name(DocKind kind);

/// One on-disk object: a vector frame (one ambient_dim x m matrix of
/// columns), a fusion system (one basis matrix per member plus weights),
/// or a bare operator / signal matrix.
///
/// Serialized as JSON with alphabetically sorted keys and 17-significant-
/// digit floats, so writing a canonically formatted document back out is
/// byte-identical. Complex entries are [re, im] pairs; the real field
/// stores plain numbers.
struct SystemDocument {
    int schema_version = 1;
    Field field = Field::Complex;
    std::size_t ambient_dim = 0;
    DocKind kind = DocKind::Operator;
    std::vector<Mat> payload;
    std::optional<std::vector<double>> weights; // fusion systems only

    void validate() const; // throws ParseError on structural violations
};

SystemDocument parse_document(const std::string& text);
SystemDocument load_document(const std::string& path);
std::string write_document(const SystemDocument& doc);
void save_document(const SystemDocument& doc, const std::string& path);

VectorFrame to_vector_frame(const SystemDocument& doc);
FusionSystem to_fusion_system(const SystemDocument& doc, const Tolerances& tol = {});
/// Any matrix payload; signals are single-column operators.
Mat to_operator(const SystemDocument& doc);

SystemDocument from_vector_frame(const VectorFrame& f);
SystemDocument from_fusion_system(const FusionSystem& w);
SystemDocument from_operator(const Mat& m, std::size_t ambient_dim);

} // namespace framekit
