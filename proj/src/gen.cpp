#include "framekit/gen.hpp"

#include <algorithm>

namespace framekit::gen {

Subspace random_subspace(Rng& rng, std::size_t ambient, std::size_t dim, Field field) {
    if (dim == 0)
        return Subspace::zero(ambient, field);
    return Subspace::span(random_mat(rng, ambient, dim, field));
}

Mat random_operator(Rng& rng, std::size_t ambient, std::size_t rank, Field field) {
    if (rank == 0)
        return Mat::zeros(ambient, ambient, field);
    if (rank >= ambient)
        return random_mat(rng, ambient, ambient, field);
    return random_mat(rng, ambient, rank, field) * random_mat(rng, rank, ambient, field);
}

FusionSystem random_system(Rng& rng, std::size_t ambient, Field field) {
    const std::size_t count = 1 + rng.below(ambient + 1);
    std::vector<WeightedSubspace> members;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t dim = rng.below(ambient + 1);
        members.push_back({random_subspace(rng, ambient, dim, field), rng.uniform_in(0.5, 2.0)});
    }
    return FusionSystem(ambient, std::move(members));
}

FusionSystem random_fusion_frame(Rng& rng, std::size_t ambient, Field field) {
    const Mat unitary = range_basis(random_mat(rng, ambient, ambient, field));
    std::vector<WeightedSubspace> members;
    std::size_t start = 0;
    while (start < ambient) {
        const std::size_t width = 1 + rng.below(ambient - start);
        std::vector<Mat> cols;
        for (std::size_t c = start; c < start + width; ++c)
            cols.push_back(unitary.col(c));
        members.push_back({Subspace(ambient, hcat(cols)), rng.uniform_in(0.5, 2.0)});
        start += width;
    }
    const std::size_t extras = rng.below(3);
    for (std::size_t i = 0; i < extras; ++i)
        members.push_back({random_subspace(rng, ambient, 1 + rng.below(ambient), field),
                           rng.uniform_in(0.5, 2.0)});
    return FusionSystem(ambient, std::move(members));
}

namespace {

Subspace column_subset(Rng& rng, const Mat& unitary, Field field) {
    std::vector<Mat> cols;
    for (std::size_t c = 0; c < unitary.cols(); ++c)
        if (rng.below(2))
            cols.push_back(unitary.col(c));
    if (cols.empty())
        return Subspace::zero(unitary.rows(), field);
    return Subspace(unitary.rows(), hcat(cols));
}

} // namespace

CommutingInstance random_commuting_instance(Rng& rng, std::size_t ambient, Field field) {
    const Mat unitary = range_basis(random_mat(rng, ambient, ambient, field));
    const std::size_t count = 1 + rng.below(4);
    std::vector<WeightedSubspace> members;
    for (std::size_t i = 0; i < count; ++i)
        members.push_back({column_subset(rng, unitary, field), rng.uniform_in(0.5, 2.0)});
    Subspace v = column_subset(rng, unitary, field);
    return {FusionSystem(ambient, std::move(members)), std::move(v), unitary};
}

CommutingInstance random_commuting_fusion_frame(Rng& rng, std::size_t ambient, Field field) {
    const Mat unitary = range_basis(random_mat(rng, ambient, ambient, field));
    std::vector<WeightedSubspace> members;
    std::size_t start = 0;
    while (start < ambient) {
        const std::size_t width = 1 + rng.below(ambient - start);
        std::vector<Mat> cols;
        for (std::size_t c = start; c < start + width; ++c)
            cols.push_back(unitary.col(c));
        members.push_back({Subspace(ambient, hcat(cols)), rng.uniform_in(0.5, 2.0)});
        start += width;
    }
    const std::size_t extras = rng.below(2);
    for (std::size_t i = 0; i < extras; ++i)
        members.push_back({column_subset(rng, unitary, field), rng.uniform_in(0.5, 2.0)});
    Subspace v = column_subset(rng, unitary, field);
    return {FusionSystem(ambient, std::move(members)), std::move(v), unitary};
}

std::vector<std::vector<std::size_t>> random_partition(Rng& rng, std::size_t count,
                                                       std::size_t max_cells) {
    const std::size_t cells = 1 + rng.below(std::min(count, max_cells));
    std::vector<std::vector<std::size_t>> out(cells);
    // guarantee no empty cell, then scatter the rest
    std::vector<std::size_t> order(count);
    for (std::size_t i = 0; i < count; ++i)
        order[i] = i;
    for (std::size_t i = count; i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);
    for (std::size_t i = 0; i < cells; ++i)
        out[i].push_back(order[i]);
    for (std::size_t i = cells; i < count; ++i)
        out[rng.below(cells)].push_back(order[i]);
    for (auto& cell : out)
        std::sort(cell.begin(), cell.end());
    return out;
}

} // namespace framekit::gen
