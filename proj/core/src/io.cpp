#include "lseries/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lseries {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        os.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!os) throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

namespace {

void index_columns(std::ostringstream& os, const char* stem, int dim) {
    for (int j = 0; j < dim; ++j) os << stem << '_' << (j + 1) << ',';
}

void index_values(std::ostringstream& os, const MultiIndex& a) {
    for (int j = 0; j < a.dim(); ++j) os << a[j] << ',';
}

}  // namespace

std::string to_csv(const CoefficientTable& table) {
    std::ostringstream os;
    index_columns(os, "alpha", table.dim());
    os << "re,im\n";
    for (std::size_t j = 0; j < table.size(); ++j) {
        index_values(os, table.exponent_at(j));
        os << format_double(table.at(j).real()) << ',' << format_double(table.at(j).imag()) << '\n';
    }
    return os.str();
}

std::string to_csv(const std::vector<SeminormReport>& reports) {
    std::ostringstream os;
    int dim = reports.empty() ? 0 : reports.front().attained_gamma.dim();
    os << "kind,k,value,";
    index_columns(os, "gamma", dim);
    for (int j = 0; j < dim; ++j) os << "rho_" << (j + 1) << (j + 1 < dim ? "," : "");
    os << '\n';
    for (const SeminormReport& r : reports) {
        os << (r.kind == SeminormReport::Kind::ck ? "ck" : "box") << ',' << r.order << ','
           << format_double(r.value) << ',';
        index_values(os, r.attained_gamma);
        for (int j = 0; j < dim; ++j) {
            os << format_double(j < static_cast<int>(r.attained_radii.size()) ? r.attained_radii[static_cast<std::size_t>(j)] : 0.0);
            if (j + 1 < dim) os << ',';
        }
        os << '\n';
    }
    return os.str();
}

std::string to_csv(const TailProfile& profile) {
    std::ostringstream os;
    os << "j,term,tail\n";
    for (const TailEntry& e : profile.entries)
        os << e.j << ',' << format_double(e.term) << ',' << format_double(e.tail) << '\n';
    return os.str();
}

std::string to_csv(const std::vector<BoundCertificate>& certificates) {
    std::ostringstream os;
    int dim = certificates.empty() ? 0 : certificates.front().alpha.dim();
    index_columns(os, "alpha", dim);
    os << "k,lhs,rhs_shifted,rhs_uniform,margin_shifted,margin_uniform,ok_shifted,ok_uniform\n";
    for (const BoundCertificate& c : certificates) {
        index_values(os, c.alpha);
        os << c.order << ',' << format_double(c.lhs) << ',' << format_double(c.rhs_shifted) << ','
           << format_double(c.rhs_uniform) << ',' << format_double(c.margin_shifted) << ','
           << format_double(c.margin_uniform) << ',' << (c.ok_shifted ? 1 : 0) << ',' << (c.ok_uniform ? 1 : 0)
           << '\n';
    }
    return os.str();
}

}  // namespace lseries
