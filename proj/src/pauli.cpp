#include "symdec/pauli.hpp"

#include <cctype>
#include <sstream>

namespace symdec {

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Z: return 'Z';
        case Pauli::Y: return 'Y';
    }
    return '?';
}

PauliString PauliString::single(size_t n, size_t qubit, Pauli p) {
    PauliString out(n);
    if (qubit >= n) {
        throw std::out_of_range("qubit index out of range");
    }
    out.set(qubit, p);
    return out;
}

PauliString PauliString::from_support(size_t n,
                                      const std::vector<std::pair<size_t, Pauli>>& support) {
    PauliString out(n);
    for (const auto& [qubit, p] : support) {
        if (qubit >= n) {
            throw std::out_of_range("qubit index out of range");
        }
        out.set(qubit, p);
    }
    return out;
}

PauliString PauliString::parse(const std::string& literal, size_t n) {
    PauliString out(n);
    std::istringstream in(literal);
    std::string token;
    while (in >> token) {
        if (token == "I") {
            continue;
        }
        Pauli p;
        switch (token[0]) {
            case 'X': p = Pauli::X; break;
            case 'Y': p = Pauli::Y; break;
            case 'Z': p = Pauli::Z; break;
            default: throw std::invalid_argument("bad Pauli label in literal: " + token);
        }
        size_t pos = 0;
        unsigned long qubit = 0;
        try {
            qubit = std::stoul(token.substr(1), &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad qubit index in literal: " + token);
        }
        if (pos + 1 != token.size()) {
            throw std::invalid_argument("bad qubit index in literal: " + token);
        }
        if (qubit >= n) {
            throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                    " out of range for n=" + std::to_string(n));
        }
        if (out.at(qubit) != Pauli::I) {
            throw std::invalid_argument("duplicate qubit in literal: " + token);
        }
        out.set(qubit, p);
    }
    return out;
}

std::vector<std::pair<size_t, Pauli>> PauliString::support() const {
    std::vector<std::pair<size_t, Pauli>> out;
    out.reserve(weight());
    for (size_t w = 0; w < x_.num_words(); w++) {
        uint64_t bits = x_.data()[w] | z_.data()[w];
        while (bits != 0) {
            size_t bit = static_cast<size_t>(__builtin_ctzll(bits));
            size_t qubit = w * 64 + bit;
            out.emplace_back(qubit, at(qubit));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string PauliString::to_literal() const {
    std::string out;
    for (const auto& [qubit, p] : support()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += pauli_char(p);
        out += std::to_string(qubit);
    }
    if (out.empty()) {
        out = "I";
    }
    return out;
}

bool commutes(const PauliString& a, const PauliString& b) {
    a.check_same_n(b);
    size_t crossings = and_popcount(a.x_bits(), b.z_bits()) +
                       and_popcount(a.z_bits(), b.x_bits());
    return (crossings & 1) == 0;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
    PauliString out = a;
    out.multiply_inplace(b);
    return out;
}

}  // namespace symdec
