#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace turan {

// Small table emitter: csv (RFC-4180 quoting, header always), md, tsv.
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void write(std::ostream& out, const std::string& format) const {
        if (format == "csv")
            write_csv(out);
        else if (format == "tsv")
            write_tsv(out);
        else
            write_md(out);
    }

private:
    static std::string csv_field(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            q += c;
            if (c == '"') q += '"';
        }
        q += '"';
        return q;
    }

    void write_csv(std::ostream& out) const {
        auto line = [&](const std::vector<std::string>& row) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out << ',';
                out << csv_field(row[i]);
            }
            out << "\n";
        };
        line(header_);
        for (const auto& row : rows_) line(row);
    }

    void write_tsv(std::ostream& out) const {
        auto line = [&](const std::vector<std::string>& row) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out << '\t';
                for (char c : row[i]) out << (c == '\t' ? ' ' : c);
            }
            out << "\n";
        };
        line(header_);
        for (const auto& row : rows_) line(row);
    }

    void write_md(std::ostream& out) const {
        auto line = [&](const std::vector<std::string>& row) {
            out << "|";
            for (const auto& f : row) out << ' ' << f << " |";
            out << "\n";
        };
        line(header_);
        out << "|";
        for (std::size_t i = 0; i < header_.size(); ++i) out << " --- |";
        out << "\n";
        for (const auto& row : rows_) line(row);
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace turan
