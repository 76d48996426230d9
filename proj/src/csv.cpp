#include "lsplus/csv.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace lsplus {

namespace {

std::vector<std::vector<std::string>> read_cells(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw CsvError("cannot open " + file.string());
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) {
            // trim surrounding blanks
            std::size_t a = cell.find_first_not_of(" \t");
            std::size_t b = cell.find_last_not_of(" \t");
            cells.push_back(a == std::string::npos ? "" : cell.substr(a, b - a + 1));
        }
        if (!line.empty() && line.back() == ',')
            throw CsvError(file.string() + ": trailing comma");
        rows.push_back(std::move(cells));
    }
    if (rows.empty()) throw CsvError(file.string() + ": empty file");
    const std::size_t w = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != w) throw CsvError(file.string() + ": ragged rows");
    return rows;
}

bool is_integer_token(const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& token) {
    if (token.empty()) throw CsvError("empty cell");
    if (is_integer_token(token)) return Rat(Int(token));

    if (auto slash = token.find('/'); slash != std::string::npos) {
        const std::string num = token.substr(0, slash), den = token.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den))
            throw CsvError("bad rational '" + token + "'");
        return make_rat(Int(num), Int(den));
    }

    // decimal / scientific literal
    std::string t = token;
    long exp10 = 0;
    if (auto e = t.find_first_of("eE"); e != std::string::npos) {
        const std::string es = t.substr(e + 1);
        if (!is_integer_token(es)) throw CsvError("bad literal '" + token + "'");
        exp10 = std::stol(es);
        t = t.substr(0, e);
    }
    if (auto dot = t.find('.'); dot != std::string::npos) {
        const std::string frac = t.substr(dot + 1);
        exp10 -= static_cast<long>(frac.size());
        t = t.substr(0, dot) + frac;
        if (t == "-" || t == "+" || t.empty()) t += "0";
    }
    if (!is_integer_token(t)) throw CsvError("bad literal '" + token + "'");
    Int mant(t), scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    return exp10 < 0 ? make_rat(mant, scale) : Rat(mant * scale);
}

IntMatrix read_int_csv(const std::filesystem::path& file) {
    const auto cells = read_cells(file);
    IntMatrix m(cells.size(), cells.front().size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer_token(cells[i][j]))
                throw CsvError(file.string() + ": non-integer entry '" + cells[i][j] + "'");
            m.at(i, j) = Int(cells[i][j]);
        }
    return m;
}

RatMatrix read_rat_csv(const std::filesystem::path& file) {
    const auto cells = read_cells(file);
    RatMatrix m(cells.size(), cells.front().size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = parse_rat(cells[i][j]);
    return m;
}

RatMatrix read_decimal_csv(const std::filesystem::path& file) { return read_rat_csv(file); }

void write_int_csv(const std::filesystem::path& file, const IntMatrix& m) {
    std::ofstream out(file);
    if (!out) throw CsvError("cannot write " + file.string());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << m.at(i, j).get_str();
        }
        out << '\n';
    }
}

void write_rat_csv(const std::filesystem::path& file, const RatMatrix& m) {
    std::ofstream out(file);
    if (!out) throw CsvError("cannot write " + file.string());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << m.at(i, j).get_str();
        }
        out << '\n';
    }
}

}  // namespace lsplus
