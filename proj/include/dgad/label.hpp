#pragma once

namespace dgad {

/// Binary class of a domain record. Class 0 is legitimate traffic,
/// class 1 is algorithmically generated (the positive class everywhere).
enum class Label : int {
    legit = 0,
    dga = 1,
};

inline int label_index(Label l) { return static_cast<int>(l); }

} // namespace dgad
