#pragma once

// Embedded copies of data/appendix_mod28.txt and data/appendix_mod30.txt, in
// the set file format, exactly as printed (including the malformed mod-28
// row with maximum 61).

#include <string_view>

namespace stanley::appendix_data {

inline constexpr std::string_view mod28 = R"(# Near-modular sets modulo 28, keyed by maximum element, as printed.
N=28; 0,5,11,13,16,18,24,57
N=28; 0,8,9,12,27,31,39,58
N=28; 0,1,9,10,13,32,40,59
N=28; 0,9,12,29,31,38,41,60
N=28; 011,13,18,24,29,44,61
N=28; 0,11,13,23,24,36,47,62
N=28; 0,5,13,17,18,30,50,63
N=28; 0,13,17,23,30,40,53,64
N=28; 0,3,27,36,39,40,58,65
N=28; 0,1,9,12,13,32,59,66
N=28; 0,8,13,23,47,52,62,67
N=28; 0,3,27,30,36,39,65,68
N=28; 0,1,3,9,12,32,66,69
N=28; 0,5,9,17,20,22,32,71
N=28; 0,11,13,18,24,29,33,72
N=28; 0,15,23,27,32,38,40,73
N=28; 0,5,11,16,24,29,41,74
N=28; 0,11,23,24,34,36,41,75
N=28; 0,5,11,16,26,31,43,76
N=28; 0,11,15,23,26,34,38,77
N=28; 0,4,5,9,15,17,48,78
N=28; 0,1,3,4,19,22,48,79
N=28; 0,5,13,16,18,39,57,80
N=28; 0,13,17,23,36,40,58,81
N=28; 0,5,11,15,16,20,59,82
N=28; 0,15,17,23,38,40,60,83
)";

inline constexpr std::string_view mod30 = R"(# Near-modular sets modulo 30, keyed by maximum element, as printed.
N=30; 0,7,9,10,17,19,26,46
N=30; 0,7,9,16,20,26,29,47
N=30; 0,10,13,21,27,31,34,48
N=30; 0,7,9,16,17,26,40,49
N=30; 0,1,3,4,14,23,41,50
N=30; 0,1,3,4,10,13,44,51
N=30; 0,4,21,25,27,31,48,52
N=30; 0,5,21,26,27,32,48,53
N=30; 0,1,3,21,22,28,49,54
N=30; 0,1,3,4,21,24,52,55
N=30; 0,2,3,5,21,24,53,56
N=30; 0,7,9,20,29,36,56,57
N=30; 0,1,10,11,17,18,57,58
N=30; 0,7,9,16,36,40,57,59
N=30; 0,3,7,10,21,24,28,61
N=30; 0,9,13,20,22,23,29,62
N=30; 0,19,22,23,29,32,40,63
N=30; 0,3,14,20,21,23,41,64
N=30; 0,3,17,21,24,38,44,65
N=30; 0,7,9,10,17,19,46,66
N=30; 0,3,19,21,24,40,46,67
N=30; 0,1,7,10,11,18,47,68
N=30; 0,3,19,22,23,32,50,69
N=30; 0,7,8,11,17,18,51,70
N=30; 0,3,20,21,24,34,53,71
N=30; 0,3,10,19,22,39,53,72
N=30; 0,3,11,14,21,40,54,73
N=30; 0,3,10,13,21,41,54,74
)";

}  // namespace stanley::appendix_data
