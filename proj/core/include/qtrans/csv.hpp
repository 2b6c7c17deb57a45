#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "qtrans/field.hpp"

namespace qtrans {

/// Line-buffered CSV writer with a fixed one-line header and floats at
/// 9 significant digits, so identical runs are byte-identical.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns);
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void row(const std::vector<double>& values);

private:
    std::FILE* f_ = nullptr;
    size_t n_cols_ = 0;
};

std::string format_double(double v);  ///< %.9g

/// Row-major complex array with a small text header (for 2D snapshots).
void write_complex2d(const std::string& path, const JointState2D& s,
                     double x_min, double dx, double q_min, double dq);

void ensure_directory(const std::string& path);

} // namespace qtrans
