#pragma once

// Printed inequality tables for the exceptional types, one entry per line,
// in the notation x_{ROW;COL} with ROW either a literal row or j+offset.

#include <string_view>

namespace pcrystal::table_data {

inline constexpr std::string_view kF4Binf[] = {
    "x_{j;1}",
    "x_{j;2} - x_{j+1;1}",
    "2x_{j;3} - x_{j+1;2}",
    "2x_{j;4} - x_{j+3;1}",
    "x_{j+1;2} - 2x_{j+1;4}",
    "x_{j+2;2} - x_{j+3;2}",
    "x_{j+2;1}- x_{j+4;1}",
    "2x_{j+2;4} - x_{j+4;2}",
    "x_{j+3;1} - x_{j+3;4}",
    "x_{j+4;2} - 2x_{j+4;3}",
    "x_{j+5;1} - x_{j+5;2}",
    "- x_{j+6;1}",
    "2x_{j;4}+x_{j+1;2} - 2x_{j+1;3}",
    "2x_{j;4} - x_{j+2;1} - x_{j+2;2}",
    "2x_{j+1;3} - 2x_{j+1;4} - x_{j+3;1}",
    "x_{j+2;1} + x_{j+2;2} - 2x_{j+2;3}",
    "2x_{j+2;2} - 2x_{j+2;3}-x_{j+3;1}",
    "x_{j+2;1}+x_{j+3;1} - x_{j+3;2}",
    "2x_{j+2;3} + x_{j+3;1} - 2x_{j+3;2}",
    "2x_{j+2;4}+x_{j+3;1} - 2x_{j+3;3}",
    "2x_{j+2;3}- x_{j+3;2} - x_{j+4;1}",
    "x_{j+2;2} - x_{j+3;1}-x_{j+4;1}",
    "x_{j+3;2} - 2x_{j+3;4}-x_{j+4;1}",
    "2x_{j+3;3} - 2x_{j+3;4}-x_{j+4;2}",
    "2x_{j+1;3}+x_{j+2;1} - 2x_{j+1;4}-x_{j+2;2}",
    "2x_{j+2;4}+x_{j+3;2} - 2x_{j+3;3}-x_{j+4;1}",
};

inline constexpr std::string_view kE6Binf[] = {
    "x_{j;1}",
    "x_{j;2} - x_{j+1;1}",
    "x_{j;3} - x_{j+1;2}",
    "x_{j;4} - x_{j+1;6}",
    "x_{j;6} - x_{j+1;5}",
    "x_{j+2;2} - x_{j+2;4}",
    "x_{j;5} - x_{j+4;1}",
    "x_{j+3;1} - x_{j+3;6}",
    "x_{j+2;6} -x_{j+2;2}",
    "x_{j+3;4}- x_{j+4;3}",
    "x_{j+3;5} - x_{j+4;4}",
    "- x_{j+4;5}",
    "x_{j;4}+x_{j;6} - x_{j+1;3}",
    "x_{j;5} + x_{j;6}- x_{j+1;4}",
    "x_{j;5} + x_{j+2;2} - x_{j+2;3}",
    "x_{j;5} + x_{j+3;1} - x_{j+3;2}",
    "x_{j+2;6} +x_{j+3;1} - x_{j+3;3}",
    "x_{j+1;3} - x_{j+1;5} -x_{j+1;6}",
    "x_{j+1;4} - x_{j+1;5} - x_{j+4;1}",
    "x_{j+2;3} - x_{j+2;4} -x_{j+4;1}",
    "x_{j+3;2} - x_{j+3;6} - x_{j+4;1}",
    "x_{j+3;3} - x_{j+3;6}-x_{j+4;2}",
    "x_{j;5}+x_{j+1;3}- x_{j+1;4}-x_{j+1;6}",
    "x_{j+1;4}+x_{j+2;2} - x_{j+1;5}-x_{j+2;3}",
    "x_{j+1;4}+x_{j+3;1} - x_{j+1;5}-x_{j+3;2}",
    "x_{j+2;3}+x_{j+3;1} - x_{j+2;4}-x_{j+3;2}",
    "x_{j+2;6}+x_{j+3;2} - x_{j+3;3}-x_{j+4;1}",
};

inline constexpr std::string_view kE7Binf[] = {
    "x_{j;1}",
    "x_{j;2} - x_{j+1;1}",
    "x_{j;3} - x_{j+1;2}",
    "x_{j;4} - x_{j+1;3}",
    "x_{j;5} - x_{j+1;7}",
    "x_{j;7} - x_{j+1;6}",
    "x_{j+2;3} - x_{j+2;5}",
    "x_{j;6} - x_{j+5;1}",
    "x_{j+3;2} - x_{j+3;7}",
    "x_{j+2;7} - x_{j+5;2}",
    "x_{j+4;1} - x_{j+4;6}",
    "x_{j+3;5} - x_{j+5;3}",
    "x_{j+3;6} - x_{j+5;7}",
    "x_{j+4;7} - x_{j+5;5}",
    "x_{j+6;3} - x_{j+6;4}",
    "x_{j+7;2} - x_{j+7;3}",
    "x_{j+8;1} - x_{j+8;2}",
    "- x_{j+9;1}",
    "x_{j;5}+x_{j;7} - x_{j+1;4}",
    "x_{j;6} + x_{j;7}- x_{j+1;5}",
    "x_{j;6} + x_{j+2;3} - x_{j+2;4}",
    "x_{j;6} + x_{j+3;2} - x_{j+3;3}",
    "x_{j;6} +x_{j+4;1} - x_{j+4;2}",
    "x_{j+2;7} +x_{j+3;2} - x_{j+3;4}",
    "x_{j+2;7} + x_{j+4;1} - x_{j+4;3}",
    "x_{j+3;5} + x_{j+4;1} - x_{j+4;4}",
    "x_{j+3;6} +x_{j+4;1} - x_{j+4;5}",
    "x_{j+3;6} +x_{j+4;7} - x_{j+5;4}",
    "x_{j+1;4} - x_{j+1;6} -x_{j+1;7}",
    "x_{j+1;5} - x_{j+1;6} -x_{j+5;1}",
    "x_{j+2;4} - x_{j+2;5} - x_{j+5;1}",
    "x_{j+3;3} - x_{j+3;7} -x_{j+5;1}",
    "x_{j+3;4} - x_{j+3;7} - x_{j+5;2}",
    "x_{j+4;2} - x_{j+4;6} - x_{j+5;1}",
    "x_{j+4;3} - x_{j+4;6} -x_{j+5;2}",
    "x_{j+4;4} - x_{j+4;6} -x_{j+5;3}",
    "x_{j+4;5} - x_{j+4;6} - x_{j+5;7}",
    "x_{j+5;4} - x_{j+5;5} -x_{j+5;7}",
    "x_{j;6}+x_{j+1;4} - x_{j+1;5}-x_{j+1;7}",
    "x_{j+1;5}+x_{j+2;3} - x_{j+1;6}-x_{j+2;4}",
    "x_{j+1;5}+x_{j+3;2} - x_{j+1;6}-x_{j+3;3}",
    "x_{j+2;4}+x_{j+3;2} -x_{j+2;5}-x_{j+3;3}",
    "x_{j+1;5}+x_{j+4;1} - x_{j+1;6}-x_{j+4;2}",
    "x_{j+2;4}+x_{j+4;1} - x_{j+2;5}-x_{j+4;2}",
    "x_{j+3;3}+x_{j+4;1} - x_{j+3;7}-x_{j+4;2}",
    "x_{j+2;7}+x_{j+3;3} -x_{j+3;4}-x_{j+5;1}",
    "x_{j+3;4}+x_{j+4;1} - x_{j+3;7}-x_{j+4;3}",
    "x_{j+2;7}+x_{j+4;2} - x_{j+4;3}-x_{j+5;1}",
    "x_{j+3;5}+x_{j+4;2} - x_{j+4;4}-x_{j+5;1}",
    "x_{j+3;6}+x_{j+4;2} - x_{j+4;5}-x_{j+5;1}",
    "x_{j+3;5}+x_{j+4;3} - x_{j+4;4}-x_{j+5;2}",
    "x_{j+3;6}+x_{j+4;3} - x_{j+4;5}-x_{j+5;2}",
    "x_{j+3;6}+x_{j+4;4} -x_{j+4;5}-x_{j+5;3}",
    "x_{j+4;5}+x_{j+4;7} - x_{j+4;6}-x_{j+5;4}",
    "x_{j+2;7}+x_{j+3;3}+x_{j+4;1} - x_{j+3;4}-x_{j+4;2}",
    "x_{j+3;4}+x_{j+4;2} - x_{j+3;7}-x_{j+4;3}-x_{j+5;1}",
};

inline constexpr std::string_view kE8Binf[] = {
    "x_{j;1}",
    "x_{j;2} - x_{j+1;1}",
    "x_{j;3} - x_{j+1;2}",
    "x_{j;4} - x_{j+1;3}",
    "x_{j;5} - x_{j+1;4}",
    "x_{j;6} - x_{j+1;8}",
    "x_{j;7} - x_{j+6;1}",
    "x_{j;8} -x_{j+1;7}",
    "x_{j+2;4} - x_{j+2;6}",
    "x_{j+2;8} - x_{j+6;2}",
    "x_{j+3;3} - x_{j+3;8}",
    "x_{j+3;6} - x_{j+6;3}",
    "x_{j+3;7} - x_{j+6;7}",
    "x_{j+4;2} - x_{j+4;7}",
    "x_{j+4;8} - x_{j+6;8}",
    "x_{j+5;1} -x_{j+10;1}",
    "x_{j+5;5} - x_{j+6;5}",
    "x_{j+5;7} - x_{j+10;2}",
    "x_{j+7;3} - x_{j+7;6}",
    "x_{j+7;8} - x_{j+10;3}",
    "x_{j+8;2} - x_{j+8;8}",
    "x_{j+8;6} - x_{j+10;4}",
    "x_{j+8;7} - x_{j+10;8}",
    "x_{j+9;1} - x_{j+9;7}",
    "x_{j+9;8}- x_{j+10;6}",
    "x_{j+11;4} - x_{j+11;5}",
    "x_{j+12;3} - x_{j+12;4}",
    "x_{j+13;2} - x_{j+13;3}",
    "x_{j+14;1} - x_{j+14;2}",
    "-x_{j+15;1}",
    "2x_{j+5;5} - x_{j+5;6}-x_{j+5;8}-x_{j+6;4}",
    "x_{j+6;5} - x_{j+6;7}-x_{j+6;8}-x_{j+10;1}",
    "x_{j+3;7}+x_{j+4;8}+x_{j+5;1} - x_{j+5;5}",
    "x_{j+5;6}+x_{j+5;8}+x_{j+6;4} - 2x_{j+6;5}",
    "x_{j;6}+x_{j;8} - x_{j+1;5}",
    "x_{j;7} + x_{j;8}- x_{j+1;6}",
    "x_{j;7} + x_{j+2;4} - x_{j+2;5}",
    "x_{j;7} + x_{j+3;3} - x_{j+3;4}",
    "x_{j;7} +x_{j+4;2} -x_{j+4;3}",
    "x_{j;7} +x_{j+5;1} - x_{j+5;2}",
    "x_{j+2;8} + x_{j+3;3} - x_{j+3;5}",
    "x_{j+2;8} + x_{j+4;2} - x_{j+4;4}",
    "x_{j+2;8} +x_{j+5;1} - x_{j+5;3}",
    "x_{j+3;6} +x_{j+4;2} - x_{j+4;5}",
    "x_{j+3;6} + x_{j+5;1} - x_{j+5;4}",
    "x_{j+3;7} + x_{j+4;2} - x_{j+4;6}",
    "x_{j+3;7} +x_{j+4;8} - x_{j+6;4}",
    "x_{j+3;7} + x_{j+5;1} - x_{j+5;8}",
    "x_{j+3;7} + x_{j+5;6} - x_{j+6;5}",
    "x_{j+3;7} +x_{j+5;7} - x_{j+6;6}",
    "x_{j+4;8} + x_{j+5;1} - x_{j+5;6}",
    "x_{j+4;8} + x_{j+5;8} - x_{j+6;5}",
    "x_{j+5;1} +x_{j+6;4} - x_{j+6;5}",
    "x_{j+5;1} + x_{j+7;3} - x_{j+7;4}",
    "x_{j+5;1} + x_{j+8;2} - x_{j+8;3}",
    "x_{j+5;1} +x_{j+9;1} - x_{j+9;2}",
    "x_{j+5;7} + x_{j+7;3} - x_{j+7;5}",
    "x_{j+5;7} + x_{j+8;2} - x_{j+8;4}",
    "x_{j+5;7} +x_{j+9;1} - x_{j+9;3}",
    "x_{j+7;8} + x_{j+8;2} - x_{j+8;5}",
    "x_{j+7;8} + x_{j+9;1} - x_{j+9;4}",
    "x_{j+8;6} +x_{j+9;1} - x_{j+9;5}",
    "x_{j+8;7} + x_{j+9;1} - x_{j+9;6}",
    "x_{j+8;7} + x_{j+9;8} - x_{j+10;5}",
    "x_{j+1;5} - x_{j+1;7} -x_{j+1;8}",
    "x_{j+1;6} - x_{j+1;7} -x_{j+6;1}",
    "x_{j+2;5} -x_{j+2;6} - x_{j+6;1}",
    "x_{j+3;4} - x_{j+3;8} -x_{j+6;1}",
    "x_{j+3;5} - x_{j+3;8} - x_{j+6;2}",
    "x_{j+4;3} - x_{j+4;7} - x_{j+6;1}",
    "x_{j+4;4} - x_{j+4;7} -x_{j+6;2}",
    "x_{j+4;5} - x_{j+4;7} - x_{j+6;3}",
    "x_{j+4;6} - x_{j+4;7} - x_{j+6;7}",
    "x_{j+5;2} - x_{j+6;1} -x_{j+10;1}",
    "x_{j+5;3} - x_{j+6;2} -x_{j+10;1}",
    "x_{j+5;4} - x_{j+6;3} -x_{j+10;1}",
    "x_{j+5;5} - x_{j+5;6} -x_{j+6;7}",
    "x_{j+5;5} - x_{j+6;4} -x_{j+10;1}",
    "x_{j+5;5} - x_{j+5;8} -x_{j+6;8}",
    "x_{j+5;6} - x_{j+6;8} -x_{j+10;1}",
    "x_{j+5;8} - x_{j+6;7} -x_{j+10;1}",
    "x_{j+6;4} - x_{j+6;7} -x_{j+6;8}",
    "x_{j+6;6} - x_{j+6;7} -x_{j+10;2}",
    "x_{j+7;4} - x_{j+7;6} -x_{j+10;1}",
    "x_{j+7;5} - x_{j+7;6} -x_{j+10;2}",
    "x_{j+8;3} - x_{j+8;8} -x_{j+10;1}",
    "x_{j+8;4} - x_{j+8;8} -x_{j+10;2}",
    "x_{j+8;5} - x_{j+8;8} -x_{j+10;3}",
    "x_{j+9;2} - x_{j+9;7} -x_{j+10;1}",
    "x_{j+9;3} - x_{j+9;7} -x_{j+10;2}",
    "x_{j+9;4} - x_{j+9;7} -x_{j+10;3}",
    "x_{j+9;5} - x_{j+9;7} -x_{j+10;4}",
    "x_{j+9;6} - x_{j+9;7} -x_{j+10;8}",
    "x_{j+10;5} - x_{j+10;6} -x_{j+10;8}",
    "x_{j+3;5}+x_{j+4;3}+x_{j+5;1} - x_{j+3;8}-x_{j+4;4}-x_{j+5;2}",
    "x_{j+3;6}+x_{j+4;4}+x_{j+5;2} - x_{j+4;5}-x_{j+5;3}-x_{j+6;1}",
    "x_{j+3;7}+x_{j+4;4}+x_{j+5;2} -x_{j+4;6}-x_{j+5;3}-x_{j+6;1}",
    "x_{j+3;7}+x_{j+4;5}+x_{j+5;2} - x_{j+4;6}-x_{j+5;4}-x_{j+6;1}",
    "x_{j+3;7}+x_{j+4;5}+x_{j+5;3} - x_{j+4;6}-x_{j+5;4}-x_{j+6;2}",
    "x_{j+4;6}+x_{j+4;8}+x_{j+5;2} - x_{j+4;7}-x_{j+5;5}-x_{j+6;1}",
    "x_{j+4;6}+x_{j+4;8}+x_{j+5;3} - x_{j+4;7}-x_{j+5;5}-x_{j+6;2}",
    "x_{j+4;6}+x_{j+4;8}+x_{j+5;4} - x_{j+4;7}-x_{j+5;5}-x_{j+6;3}",
    "x_{j+5;7}+x_{j+6;5}+x_{j+7;3} - x_{j+6;6}-x_{j+6;8}-x_{j+7;4}",
    "x_{j+5;7}+x_{j+6;5}+x_{j+8;2} - x_{j+6;6}-x_{j+6;8}-x_{j+8;3}",
    "x_{j+5;7}+x_{j+6;5}+x_{j+9;1} - x_{j+6;6}-x_{j+6;8}-x_{j+9;2}",
    "x_{j+6;6}+x_{j+7;4}+x_{j+8;2} - x_{j+6;7}-x_{j+7;5}-x_{j+8;3}",
    "x_{j+6;6}+x_{j+7;4}+x_{j+9;1} - x_{j+6;7}-x_{j+7;5}-x_{j+9;2}",
    "x_{j+6;6}+x_{j+8;3}+x_{j+9;1} - x_{j+6;7}-x_{j+8;4}-x_{j+9;2}",
    "x_{j+7;5}+x_{j+8;3}+x_{j+9;1} - x_{j+7;6}-x_{j+8;4}-x_{j+9;2}",
    "x_{j+7;8}+x_{j+8;4}+x_{j+9;2} - x_{j+8;5}-x_{j+9;3}-x_{j+10;1}",
    "x_{j;7}+x_{j+1;5} - x_{j+1;6}-x_{j+1;8}",
    "x_{j+1;6}+x_{j+2;4} - x_{j+1;7}-x_{j+2;5}",
    "x_{j+1;6}+x_{j+3;3} - x_{j+1;7}-x_{j+3;4}",
    "x_{j+1;6}+x_{j+4;2} - x_{j+1;7}-x_{j+4;3}",
    "x_{j+1;6}+x_{j+5;1} - x_{j+1;7}-x_{j+5;2}",
    "x_{j+2;5}+x_{j+2;6} - x_{j+3;3}-x_{j+3;4}",
    "x_{j+2;5}+x_{j+4;2} -x_{j+2;6}-x_{j+4;3}",
    "x_{j+2;5}+x_{j+5;1} - x_{j+2;6}-x_{j+5;2}",
    "x_{j+2;8}+x_{j+3;4} - x_{j+3;5}-x_{j+6;1}",
    "x_{j+2;8}+x_{j+4;3} - x_{j+4;4}-x_{j+6;1}",
    "x_{j+2;8}+x_{j+5;2} - x_{j+5;3}-x_{j+6;1}",
    "x_{j+3;4}+x_{j+4;2} - x_{j+3;8}-x_{j+4;3}",
    "x_{j+3;4}+x_{j+5;1} - x_{j+3;8}-x_{j+5;2}",
    "x_{j+3;5}+x_{j+4;2} - x_{j+3;8}-x_{j+4;4}",
    "x_{j+3;5}+x_{j+5;1} - x_{j+3;8}-x_{j+5;3}",
    "x_{j+3;6}+x_{j+4;3} - x_{j+4;5}-x_{j+6;1}",
    "x_{j+3;6}+x_{j+4;4} - x_{j+4;5}-x_{j+6;2}",
    "x_{j+3;6}+x_{j+5;2} - x_{j+5;4}-x_{j+6;1}",
    "x_{j+3;6}+x_{j+5;3} - x_{j+5;4}-x_{j+6;2}",
    "x_{j+3;7}+x_{j+4;3} - x_{j+4;6}-x_{j+6;1}",
    "x_{j+3;7}+x_{j+4;4} - x_{j+4;6}-x_{j+6;2}",
    "x_{j+3;7}+x_{j+4;5} - x_{j+4;6}-x_{j+6;3}",
    "x_{j+3;7}+x_{j+5;2} - x_{j+5;8}-x_{j+6;1}",
    "x_{j+3;7}+x_{j+5;3} - x_{j+5;8}-x_{j+6;2}",
    "x_{j+3;7}+x_{j+5;4} - x_{j+5;8}-x_{j+6;3}",
    "x_{j+3;7}+x_{j+5;5} - x_{j+5;8}-x_{j+6;4}",
    "x_{j+4;3}+x_{j+5;1} - x_{j+4;7}-x_{j+5;2}",
    "x_{j+4;4}+x_{j+5;1} - x_{j+4;7}-x_{j+5;3}",
    "x_{j+4;5}+x_{j+5;1} -x_{j+4;7}-x_{j+5;4}",
    "x_{j+4;6}+x_{j+4;8} - x_{j+4;7}-x_{j+6;4}",
    "x_{j+4;6}+x_{j+5;1} -x_{j+4;7}-x_{j+5;8}",
    "x_{j+4;6}+x_{j+5;6} - x_{j+4;7}-x_{j+6;5}",
    "x_{j+4;6}+x_{j+5;7} - x_{j+4;7}-x_{j+6;6}",
    "x_{j+4;8}+x_{j+5;2} - x_{j+5;6}-x_{j+6;1}",
    "x_{j+4;8}+x_{j+5;3} - x_{j+5;6}-x_{j+6;2}",
    "x_{j+4;8}+x_{j+5;4} - x_{j+5;6}-x_{j+6;3}",
    "x_{j+4;8}+x_{j+5;5} - x_{j+5;6}-x_{j+6;4}",
    "x_{j+5;1}+x_{j+5;5} - x_{j+5;6}-x_{j+5;8}",
    "x_{j+5;2}+x_{j+6;4} - x_{j+6;1}-x_{j+6;5}",
    "x_{j+5;2}+x_{j+7;3} - x_{j+6;1}-x_{j+7;4}",
    "x_{j+5;2}+x_{j+8;2} - x_{j+6;1}-x_{j+8;3}",
    "x_{j+5;2}+x_{j+9;1} - x_{j+6;1}-x_{j+9;2}",
    "x_{j+5;3}+x_{j+6;4} - x_{j+6;2}-x_{j+6;5}",
    "x_{j+5;3}+x_{j+7;3} - x_{j+6;2}-x_{j+7;4}",
    "x_{j+5;3}+x_{j+8;2} - x_{j+6;2}-x_{j+8;3}",
    "x_{j+5;3}+x_{j+9;1} - x_{j+6;2}-x_{j+9;2}",
    "x_{j+5;4}+x_{j+6;4} - x_{j+6;3}-x_{j+6;5}",
    "x_{j+5;4}+x_{j+7;3} - x_{j+6;3}-x_{j+7;4}",
    "x_{j+5;4}+x_{j+8;2} - x_{j+6;3}-x_{j+8;3}",
    "x_{j+5;4}+x_{j+9;1} -x_{j+6;3}-x_{j+9;2}",
    "x_{j+5;5}+x_{j+5;7} - x_{j+5;6}-x_{j+6;6}",
    "x_{j+5;5}+x_{j+7;3} - x_{j+6;4}-x_{j+7;4}",
    "x_{j+5;5}+x_{j+8;2} - x_{j+6;4}-x_{j+8;3}",
    "x_{j+5;5}+x_{j+9;1} - x_{j+6;4}-x_{j+9;2}",
    "x_{j+5;6}+x_{j+5;8} - x_{j+6;5}-x_{j+10;1}",
    "x_{j+5;6}+x_{j+6;4} - x_{j+6;5}-x_{j+6;8}",
    "x_{j+5;6}+x_{j+7;3} - x_{j+6;8}-x_{j+7;4}",
    "x_{j+5;6}+x_{j+8;2} - x_{j+6;8}-x_{j+8;3}",
    "x_{j+5;6}+x_{j+9;1} - x_{j+6;8}-x_{j+9;2}",
    "x_{j+5;7}+x_{j+5;8} - x_{j+6;6}-x_{j+10;1}",
    "x_{j+5;7}+x_{j+6;4} - x_{j+6;6}-x_{j+6;8}",
    "x_{j+5;7}+x_{j+7;4} -x_{j+7;5}-x_{j+10;1}",
    "x_{j+5;7}+x_{j+8;3} - x_{j+8;4}-x_{j+10;1}",
    "x_{j+5;7}+x_{j+9;2} - x_{j+9;3}-x_{j+10;1}",
    "x_{j+5;8}+x_{j+6;4} - x_{j+6;5}-x_{j+6;7}",
    "x_{j+5;8}+x_{j+7;3} -x_{j+6;7}-x_{j+7;4}",
    "x_{j+5;8}+x_{j+8;2} - x_{j+6;7}-x_{j+8;3}",
    "x_{j+5;8}+x_{j+9;1} - x_{j+6;7}-x_{j+9;2}",
    "x_{j+6;6}+x_{j+7;3} - x_{j+6;7}-x_{j+7;5}",
    "x_{j+6;6}+x_{j+8;2} - x_{j+6;7}-x_{j+8;4}",
    "x_{j+6;6}+x_{j+9;1} - x_{j+6;7}-x_{j+9;3}",
    "x_{j+7;4}+x_{j+8;2} - x_{j+7;6}-x_{j+8;3}",
    "x_{j+7;4}+x_{j+9;1} - x_{j+7;6}-x_{j+9;2}",
    "x_{j+7;5}+x_{j+8;2} - x_{j+7;6}-x_{j+8;4}",
    "x_{j+7;5}+x_{j+9;1} - x_{j+7;6}-x_{j+9;3}",
    "x_{j+7;8}+x_{j+8;3} - x_{j+8;5}-x_{j+10;1}",
    "x_{j+7;8}+x_{j+8;4} - x_{j+8;5}-x_{j+10;2}",
    "x_{j+7;8}+x_{j+9;2} - x_{j+9;4}-x_{j+10;1}",
    "x_{j+7;8}+x_{j+9;3} - x_{j+9;4}-x_{j+10;2}",
    "x_{j+8;3}+x_{j+9;1} - x_{j+8;8}-x_{j+9;2}",
    "x_{j+8;4}+x_{j+9;1} - x_{j+8;8}-x_{j+9;3}",
    "x_{j+8;5}+x_{j+9;1} - x_{j+8;8}-x_{j+9;4}",
    "x_{j+8;6}+x_{j+9;2} - x_{j+9;5}-x_{j+10;1}",
    "x_{j+8;6}+x_{j+9;3} - x_{j+9;5}-x_{j+10;2}",
    "x_{j+8;6}+x_{j+9;4} -x_{j+9;5}-x_{j+10;3}",
    "x_{j+8;7}+x_{j+9;2} -x_{j+9;6}-x_{j+10;1}",
    "x_{j+8;7}+x_{j+9;3} - x_{j+9;6}-x_{j+10;2}",
    "x_{j+8;7}+x_{j+9;4} - x_{j+9;6}-x_{j+10;3}",
    "x_{j+8;7}+x_{j+9;5} - x_{j+9;6}-x_{j+10;4}",
    "x_{j+9;6}+x_{j+9;8} -x_{j+9;7}-x_{j+10;5}",
    "x_{j+2;8}+x_{j+3;4}+x_{j+4;2} - x_{j+3;5}-x_{j+4;3}",
    "x_{j+2;8}+x_{j+3;4}+x_{j+5;1} -x_{j+3;5}-x_{j+5;2}",
    "x_{j+2;8}+x_{j+4;3}+x_{j+5;1} -x_{j+4;4}-x_{j+5;2}",
    "x_{j+3;6}+x_{j+4;3}+x_{j+5;1} -x_{j+4;5}-x_{j+5;2}",
    "x_{j+3;6}+x_{j+4;4}+x_{j+5;1} - x_{j+4;5}-x_{j+5;3}",
    "x_{j+3;7}+x_{j+4;3}+x_{j+5;1} - x_{j+4;6}-x_{j+5;2}",
    "x_{j+3;7}+x_{j+4;4}+x_{j+5;1} - x_{j+4;6}-x_{j+5;3}",
    "x_{j+3;7}+x_{j+4;5}+x_{j+5;1} - x_{j+4;6}-x_{j+5;4}",
    "x_{j+3;7}+x_{j+4;8}+x_{j+5;2} - x_{j+5;5}-x_{j+6;1}",
    "x_{j+3;7}+x_{j+4;8}+x_{j+5;3} - x_{j+5;5}-x_{j+6;2}",
    "x_{j+3;7}+x_{j+4;8}+x_{j+5;4} - x_{j+5;5}-x_{j+6;3}",
    "x_{j+4;6}+x_{j+4;8}+x_{j+5;1} - x_{j+4;7}-x_{j+5;5}",
    "x_{j+5;6}+x_{j+5;8}+x_{j+7;3} - x_{j+6;5}-x_{j+7;4}",
    "x_{j+5;6}+x_{j+5;8}+x_{j+8;2} - x_{j+6;5}-x_{j+8;3}",
    "x_{j+5;6}+x_{j+5;8}+x_{j+9;1} - x_{j+6;5}-x_{j+9;2}",
    "x_{j+5;7}+x_{j+5;8}+x_{j+6;4} - x_{j+6;5}-x_{j+6;6}",
    "x_{j+5;7}+x_{j+5;8}+x_{j+7;3} - x_{j+6;6}-x_{j+7;4}",
    "x_{j+5;7}+x_{j+5;8}+x_{j+8;2} - x_{j+6;6}-x_{j+8;3}",
    "x_{j+5;7}+x_{j+5;8}+x_{j+9;1} - x_{j+6;6}-x_{j+9;2}",
    "x_{j+5;7}+x_{j+7;4}+x_{j+8;2} -x_{j+7;5}-x_{j+8;3}",
    "x_{j+5;7}+x_{j+7;4}+x_{j+9;1} - x_{j+7;5}-x_{j+9;2}",
    "x_{j+5;7}+x_{j+8;3}+x_{j+9;1} - x_{j+8;4}-x_{j+9;2}",
    "x_{j+7;8}+x_{j+8;3}+x_{j+9;1} -x_{j+8;5}-x_{j+9;2}",
    "x_{j+7;8}+x_{j+8;4}+x_{j+9;1} - x_{j+8;5}-x_{j+9;3}",
    "x_{j+3;5}+x_{j+4;3} - x_{j+3;8}-x_{j+4;4}-x_{j+6;1}",
    "x_{j+3;5}+x_{j+5;2} - x_{j+3;8}-x_{j+5;3}-x_{j+6;1}",
    "x_{j+4;4}+x_{j+5;2} - x_{j+4;7}-x_{j+5;3}-x_{j+6;1}",
    "x_{j+4;5}+x_{j+5;2} -x_{j+4;7}-x_{j+5;4}-x_{j+6;1}",
    "x_{j+4;5}+x_{j+5;3} - x_{j+4;7}-x_{j+5;4}-x_{j+6;2}",
    "x_{j+4;6}+x_{j+5;2} -x_{j+4;7}-x_{j+5;8}-x_{j+6;1}",
    "x_{j+4;6}+x_{j+5;3} - x_{j+4;7}-x_{j+5;8}-x_{j+6;2}",
    "x_{j+4;6}+x_{j+5;4} - x_{j+4;7}-x_{j+5;8}-x_{j+6;3}",
    "x_{j+4;6}+x_{j+5;5} - x_{j+4;7}-x_{j+5;8}-x_{j+6;4}",
    "x_{j+5;2}+x_{j+5;5} - x_{j+5;6}-x_{j+5;8}-x_{j+6;1}",
    "x_{j+5;3}+x_{j+5;5} -x_{j+5;6}-x_{j+5;8}-x_{j+6;2}",
    "x_{j+5;4}+x_{j+5;5} - x_{j+5;6}-x_{j+5;8}-x_{j+6;3}",
    "x_{j+5;7}+x_{j+6;5} - x_{j+6;6}-x_{j+6;8}-x_{j+10;1}",
    "x_{j+6;5}+x_{j+7;3} - x_{j+6;7}-x_{j+6;8}-x_{j+7;4}",
    "x_{j+6;5}+x_{j+8;2} - x_{j+6;7}-x_{j+6;8}-x_{j+8;3}",
    "x_{j+6;5}+x_{j+9;1} - x_{j+6;7}-x_{j+6;8}-x_{j+9;2}",
    "x_{j+6;6}+x_{j+7;4} - x_{j+6;7}-x_{j+7;5}-x_{j+10;1}",
    "x_{j+6;6}+x_{j+8;3} - x_{j+6;7}-x_{j+8;4}-x_{j+10;1}",
    "x_{j+6;6}+x_{j+9;2} - x_{j+6;7}-x_{j+9;3}-x_{j+10;1}",
    "x_{j+7;5}+x_{j+8;3} - x_{j+7;6}-x_{j+8;4}-x_{j+10;1}",
    "x_{j+7;5}+x_{j+9;2} - x_{j+7;6}-x_{j+9;3}-x_{j+10;1}",
    "x_{j+8;4}+x_{j+9;2} - x_{j+8;8}-x_{j+9;3}-x_{j+10;1}",
    "x_{j+8;5}+x_{j+9;2} - x_{j+8;8}-x_{j+9;4}-x_{j+10;1}",
    "x_{j+8;5}+x_{j+9;3} -x_{j+8;8}-x_{j+9;4}-x_{j+10;2}",
};

inline constexpr std::string_view kF4Xi3[] = {
    "x_{1;2} - x_{1;3}",
    "x_{1;3} - x_{3;1}",
    "x_{2;1} - x_{2;4}",
    "x_{2;3} - x_{3;3}",
    "x_{1;4}- x_{3;4}",
    "x_{2;4} - x_{5;1}",
    "x_{4;1} - x_{4;3}",
    "x_{4;3} - x_{5;2}",
    "x_{4;4} - x_{5;3}",
    "- x_{5;4}",
    "x_{1;3}+x_{2;1} - x_{2;2}",
    "x_{1;4} + x_{2;1} - x_{2;3}",
    "x_{1;4} + x_{2;3} - x_{3;2}",
    "x_{1;4} + x_{2;4} - x_{3;3}",
    "x_{2;4} + x_{3;2}-2x_{3;3}",
    "x_{2;4}+x_{4;1} - x_{4;2}",
    "x_{2;2}-x_{2;4} - x_{3;1}",
    "2x_{2;3} - x_{2;4} - x_{3;2}",
    "x_{3;2} - x_{3;3} - x_{3;4}",
    "x_{2;3} - x_{2;4} - x_{3;4}",
    "x_{3;3} - x_{3;4}-x_{5;1}",
    "x_{4;2}-x_{4;3} - x_{5;1}",
    "x_{1;4}+x_{2;2} - x_{2;3}-x_{3;1}",
    "x_{3;3}+x_{4;1} - x_{3;4}-x_{4;2}",
};

inline constexpr std::string_view kF4Xi4[] = {
    "x_{1;3} - x_{1;4}",
    "x_{2;2} - x_{2;3}",
    "x_{2;3} - x_{4;1}",
    "x_{3;1} - x_{3;4}",
    "x_{3;3}- x_{4;3}",
    "x_{2;4} - x_{4;4}",
    "x_{3;4} - x_{6;1}",
    "x_{5;1} - x_{5;3}",
    "x_{5;3} - x_{6;2}",
    "x_{5;4} - x_{6;3}",
    "- x_{6;4}",
    "x_{2;3}+x_{3;1} - x_{3;2}",
    "x_{2;4} + x_{3;1} - x_{3;3}",
    "x_{2;4} + x_{3;3} - x_{4;2}",
    "x_{2;4} + x_{3;4} - x_{4;3}",
    "x_{3;4} + x_{4;2}-2x_{4;3}",
    "x_{3;4}+x_{5;1} - x_{5;2}",
    "x_{3;2}-x_{3;4} - x_{4;1}",
    "2x_{3;3} - x_{3;4} - x_{4;2}",
    "x_{4;2} - x_{4;3} - x_{4;4}",
    "x_{3;3} - x_{3;4} - x_{4;4}",
    "x_{4;3} - x_{4;4}-x_{6;1}",
    "x_{5;2}-x_{5;3} - x_{6;1}",
    "x_{2;4}+x_{3;2} - x_{3;3}-x_{4;1}",
    "x_{4;3}+x_{5;1} - x_{4;4}-x_{5;2}",
};

inline constexpr std::string_view kE6Xi4[] = {
    "x_{1;3} - x_{1;4}",
    "x_{2;2} - x_{2;6}",
    "x_{1;6} - x_{4;1}",
    "x_{3;1} - x_{3;5}",
    "x_{2;4}- x_{4;2}",
    "x_{2;5} - x_{4;6}",
    "x_{3;6} - x_{4;4}",
    "x_{5;2} - x_{5;3}",
    "x_{6;1} - x_{6;2}",
    "-x_{7;1}",
    "x_{1;6}+x_{2;2} - x_{2;3}",
    "x_{1;6} + x_{3;1} - x_{3;2}",
    "x_{2;4} + x_{3;1} - x_{3;3}",
    "x_{2;5} + x_{3;1} - x_{3;4}",
    "x_{2;5} + x_{3;6}-x_{4;3}",
    "x_{2;3}-x_{2;6} - x_{4;1}",
    "x_{3;2} - x_{3;5} - x_{4;1}",
    "x_{3;3} - x_{3;5} - x_{4;2}",
    "x_{3;4} - x_{3;5} - x_{4;6}",
    "x_{4;3} - x_{4;4}-x_{4;6}",
    "x_{2;3}+x_{3;1} - x_{2;6}-x_{3;2}",
    "x_{2;4}+x_{3;2} - x_{3;3}-x_{4;1}",
    "x_{2;5}+x_{3;2} - x_{3;4}-x_{4;1}",
    "x_{2;5}+x_{3;3} - x_{3;4}-x_{4;2}",
    "x_{3;4}+x_{3;6} - x_{3;5}-x_{4;3}",
};

inline constexpr std::string_view kE6Xi5[] = {
    "x_{1;4} - x_{1;5}",
    "x_{2;3} - x_{2;4}",
    "x_{3;2} - x_{3;6}",
    "x_{2;6} - x_{5;1}",
    "x_{4;1} - x_{4;5}",
    "x_{3;4}- x_{5;2}",
    "x_{3;5} - x_{5;6}",
    "x_{4;6} - x_{5;4}",
    "x_{6;2} - x_{6;3}",
    "x_{7;1} - x_{7;2}",
    "-x_{8;1}",
    "x_{2;6}+x_{3;2} - x_{3;3}",
    "x_{2;6} + x_{4;1} - x_{4;2}",
    "x_{3;4} + x_{4;1} - x_{4;3}",
    "x_{3;5} + x_{4;1} - x_{4;4}",
    "x_{3;5} + x_{4;6}-x_{5;3}",
    "x_{3;3}-x_{3;6} - x_{5;1}",
    "x_{4;2} - x_{4;5} - x_{5;1}",
    "x_{4;3} - x_{4;5} - x_{5;2}",
    "x_{4;4} - x_{4;5} - x_{5;6}",
    "x_{5;3} - x_{5;4}-x_{5;6}",
    "x_{3;3}+x_{4;1} - x_{3;6}-x_{4;2}",
    "x_{3;4}+x_{4;2} - x_{4;3}-x_{5;1}",
    "x_{3;5}+x_{4;2} - x_{4;4}-x_{5;1}",
    "x_{3;5}+x_{4;3} - x_{4;4}-x_{5;2}",
    "x_{4;4}+x_{4;6} - x_{4;5}-x_{5;3}",
};

inline constexpr std::string_view kE6Xi6[] = {
    "x_{1;3} - x_{1;6}",
    "x_{2;2} - x_{2;5}",
    "x_{1;4} - x_{4;1}",
    "x_{3;3} - x_{4;3}",
    "x_{3;1} - x_{6;1}",
    "x_{2;6}- x_{4;6}",
    "x_{1;5} - x_{4;5}",
    "x_{5;1} - x_{5;4}",
    "x_{3;5} - x_{6;2}",
    "x_{5;6} - x_{6;3}",
    "-x_{6;1}",
    "x_{1;4}+x_{2;2} - x_{2;3}",
    "x_{1;5} + x_{2;2} - x_{2;4}",
    "x_{1;4} + x_{3;1} - x_{3;2}",
    "x_{1;5} + x_{3;1} - x_{3;6}",
    "x_{2;6}+x_{3;1} - x_{2;4}",
    "x_{1;5} + x_{2;6} - x_{4;2}",
    "x_{2;1} + x_{4;2} - x_{4;3}",
    "x_{1;5} + x_{3;4} - x_{4;3}",
    "x_{3;1}+x_{5;1} - x_{5;2}",
    "x_{2;6} + x_{3;6} - x_{4;3}",
    "x_{1;5} + x_{3;5} - x_{4;4}",
    "x_{3;5} + x_{5;1} - x_{5;3}",
    "x_{2;3}-x_{2;5} - x_{4;1}",
    "x_{3;2} - x_{4;1} - x_{6;1}",
    "x_{3;3} - x_{3;6} - x_{4;6}",
    "x_{2;4} - x_{2;5} - x_{4;5}",
    "x_{3;3}-x_{4;2} - x_{6;1}",
    "x_{3;3} - x_{3;4} - x_{4;5}",
    "x_{4;2} - x_{4;5} - x_{4;6}",
    "x_{3;4} - x_{4;6} - x_{6;1}",
    "x_{3;6}-x_{4;5} - x_{6;1}",
    "x_{5;2} - x_{5;4} - x_{6;1}",
    "x_{4;4} - x_{4;5} - x_{6;2}",
    "x_{5;3} - x_{5;4} - x_{6;2}",
    "x_{2;3}+x_{3;1} - x_{2;5}-x_{3;2}",
    "x_{1;5}+x_{2;3} - x_{2;4}-x_{4;1}",
    "x_{2;4}+x_{3;1} - x_{2;5}-x_{3;6}",
    "x_{1;5}+x_{3;2} - x_{3;6}-x_{4;1}",
    "x_{3;1}+x_{3;3} - x_{3;4}-x_{3;6}",
    "x_{2;6}+x_{3;2} - x_{3;4}-x_{4;1}",
    "x_{2;4}+x_{2;5} - x_{2;6}-x_{4;2}",
    "x_{1;5}+x_{3;3} - x_{3;6}-x_{4;2}",
    "x_{2;6}+x_{3;3} - x_{3;4}-x_{4;2}",
    "x_{3;2}+x_{4;2} - x_{4;1}-x_{4;3}",
    "x_{2;4}+x_{3;4} - x_{2;5}-x_{4;3}",
    "x_{3;2}+x_{5;1} - x_{4;1}-x_{5;2}",
    "x_{2;4}+x_{3;5} - x_{2;5}-x_{4;4}",
    "x_{3;4}+x_{4;2} - x_{4;3}-x_{4;6}",
    "x_{3;3}+x_{4;2} - x_{5;1}-x_{5;2}",
    "x_{3;3}+x_{3;5} - x_{3;4}-x_{4;4}",
    "x_{3;6}+x_{4;2} - x_{4;3}-x_{4;5}",
    "x_{3;5}+x_{4;2} - x_{4;4}-x_{4;6}",
    "x_{3;4}+x_{5;1} - x_{4;6}-x_{5;2}",
    "x_{3;4}+x_{3;6} - x_{4;3}-x_{6;1}",
    "x_{3;6}+x_{5;1} - x_{4;5}-x_{5;2}",
    "x_{3;5}+x_{3;6} - x_{4;4}-x_{6;1}",
    "x_{4;4}+x_{5;1} - x_{4;5}-x_{5;3}",
    "x_{3;5}+x_{5;2} - x_{5;3}-x_{6;1}",
    "x_{1;5}+x_{2;6} + x_{3;1}-x_{3;3}",
    "x_{3;4}+x_{3;6} + x_{4;2}-2x_{4;3}",
    "2x_{3;3}-x_{3;4} - x_{3;6}-x_{4;2}",
    "x_{4;3}-x_{4;5} - x_{4;6}-x_{6;1}",
    "x_{2;4}+x_{2;6} + x_{3;2}-x_{2;5} -x_{3;3}-x_{4;1}",
    "x_{3;5}+x_{4;3}+ x_{5;1}-x_{4;4} -x_{4;6}-x_{5;2}",
    "x_{1;5} +x_{2;3}+x_{3;1} -x_{2;4} - x_{3;2}",
    "x_{2;4} +x_{2;6}+x_{3;1} -x_{2;5}- x_{3;3}",
    "x_{1;5} +x_{2;6}+x_{3;2} -x_{3;3} - x_{4;1}",
    "x_{3;5} +x_{3;6}+x_{4;2} -x_{4;3} - x_{4;4}",
    "x_{3;4} +x_{3;6}+x_{5;1} -x_{4;3}- x_{5;2}",
    "x_{3;5} +x_{3;6}+x_{5;1} -x_{4;4} - x_{5;2}",
    "x_{2;4} +x_{3;2}-x_{2;5} -x_{3;6} - x_{4;1}",
    "x_{3;2} +x_{3;3}-x_{3;4} -x_{3;6}- x_{4;1}",
    "x_{2;4} +x_{3;3}-x_{2;5} -x_{3;6} - x_{4;2}",
    "x_{4;3} +x_{5;1}-x_{4;5} -x_{4;6} - x_{5;2}",
    "x_{3;5} +x_{4;3}-x_{4;4} -x_{4;6}- x_{6;1}",
    "x_{4;4} +x_{5;2}-x_{4;5} -x_{5;3} - x_{6;1}",
};

/// Printed entries that disagree with the S-closure, with the entry the
/// closure produces in their place.
struct Erratum {
  std::string_view table;
  std::string_view printed;
  std::string_view corrected;
};

inline constexpr Erratum kErrata[] = {
    {"kF4Binf", "2x_{j;4} - x_{j+2;1} - x_{j+2;2}", "2x_{j;4} + x_{j+2;1} - x_{j+2;2}"},
    {"kF4Binf", "x_{j+3;1} - x_{j+3;4}", "x_{j+3;1} - 2x_{j+3;4}"},
    {"kE6Binf", "x_{j+2;6} -x_{j+2;2}", "x_{j+2;6} - x_{j+4;2}"},
    {"kE6Xi6", "x_{2;1} + x_{4;2} - x_{4;3}", "x_{3;1} + x_{4;2} - x_{4;3}"},
    {"kE6Xi6", "x_{2;6}+x_{3;1} - x_{2;4}", "x_{2;6} + x_{3;1} - x_{3;4}"},
    {"kE6Xi6", "x_{2;4}+x_{2;5} - x_{2;6}-x_{4;2}", "x_{2;4} - x_{2;5} + x_{2;6} - x_{4;2}"},
    {"kE6Xi6", "x_{3;3}+x_{4;2} - x_{5;1}-x_{5;2}", "x_{3;3} - x_{4;2} + x_{5;1} - x_{5;2}"},
    {"kE6Xi6", "-x_{6;1}", "-x_{6;6}"},
    {"kE8Binf", "x_{j+2;5}+x_{j+2;6} - x_{j+3;3}-x_{j+3;4}", "x_{j+2;5} - x_{j+2;6} + x_{j+3;3} - x_{j+3;4}"},
};

} // namespace pcrystal::table_data
