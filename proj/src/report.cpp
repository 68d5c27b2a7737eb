#include "sliceweaver/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sliceweaver/errors.hpp"

namespace sliceweaver {

namespace {

void write_atomic(const std::filesystem::path& target, const std::string& content) {
    const std::filesystem::path staging = target.string() + ".tmp";
    {
        std::ofstream stream(staging, std::ios::binary | std::ios::trunc);
        if (!stream) throw IoError("cannot open '" + staging.string() + "' for writing");
        stream << content;
        stream.flush();
        if (!stream) throw IoError("failed writing '" + staging.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(staging, target, ec);
    if (ec) {
        throw IoError("failed renaming '" + staging.string() + "' to '" +
                      target.string() + "': " + ec.message());
    }
}

}  // namespace

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

std::string render_arrivals_csv(const SimulationReport& report) {
    std::ostringstream out;
    out << "index,category,resource,admitted,total_after,color,category_count\n";
    for (const ArrivalRecord& record : report.arrivals) {
        out << record.index << ',' << record.category << ','
            << format_number(record.resource) << ',' << (record.admitted ? 1 : 0) << ','
            << format_number(record.total_after) << ',';
        if (record.color) out << *record.color;
        out << ',' << record.category_count_after << '\n';
    }
    return out.str();
}

std::string render_summary(const SimulationReport& report) {
    std::ostringstream out;
    out << "seed=" << report.seed << '\n';
    out << "slice_capacity=" << report.slice_capacity << '\n';
    out << "service_cap_analytic=" << report.service_cap_analytic << '\n';
    for (const CategorySummary& category : report.categories) {
        out << "category_capacity_" << category.category << '=' << category.admitted
            << '\n';
    }
    for (const CategorySummary& category : report.categories) {
        out << "category_colors_" << category.category << '=' << category.colors_used
            << '\n';
    }
    out << "variance_term_sigma=" << format_number(report.variance.term_sigma) << '\n';
    out << "variance_term_cov=" << format_number(report.variance.term_cov) << '\n';
    out << "variance_term_mean=" << format_number(report.variance.term_mean) << '\n';
    out << "variance_total=" << format_number(report.variance.total) << '\n';
    out << "mean_load=" << format_number(report.mean_load) << '\n';
    out << "sla_lower_bound=" << format_number(report.sla_bound) << '\n';
    return out.str();
}

std::vector<std::filesystem::path> emit_report(const SimulationReport& report,
                                               const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + out_dir.string() +
                      "': " + ec.message());
    }
    const std::filesystem::path csv_path = out_dir / "arrivals.csv";
    const std::filesystem::path summary_path = out_dir / "summary.txt";
    write_atomic(csv_path, render_arrivals_csv(report));
    write_atomic(summary_path, render_summary(report));
    return {csv_path, summary_path};
}

}  // namespace sliceweaver
