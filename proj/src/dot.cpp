#include "tricat/dot.hpp"

#include <sstream>

namespace tricat {

namespace {
std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}
}  // namespace

std::string dot_braid(const Instance& inst, const BraidDiagram& b) {
    std::ostringstream os;
    os << "digraph braid {\n  rankdir=LR;\n  node [shape=ellipse];\n";
    auto node = [&](const std::string& id, const ObjectRef& x) {
        os << "  " << id << " [label=" << quoted(x.name()) << "];\n";
    };
    const auto& w = b.w;
    node("X", w.f.source);
    node("Y", w.f.target);
    node("Z", w.g.target);
    node("Cf", w.t_f.z);
    node("Cgf", w.t_gf.z);
    node("Cg", w.t_g.z);
    node("SX", inst.suspend_obj(w.f.source));
    node("SY", inst.suspend_obj(w.g.source));
    node("SCf", inst.suspend_obj(w.t_f.z));
    auto edge = [&](const std::string& a, const std::string& bnode, const std::string& label) {
        os << "  " << a << " -> " << bnode << " [label=" << quoted(label) << "];\n";
    };
    edge("X", "Y", "f");
    edge("Y", "Z", "g");
    edge("X", "Z", "gf");
    edge("Y", "Cf", "i_f");
    edge("Cf", "SX", "p_f");
    edge("Z", "Cgf", "i_gf");
    edge("Cgf", "SX", "p_gf");
    edge("Z", "Cg", "i_g");
    edge("Cg", "SY", "p_g");
    edge("Cf", "Cgf", "k");
    edge("Cgf", "Cg", "k'");
    edge("Cg", "SCf", "k''");
    edge("SX", "SY", "Σf");
    os << "}\n";
    return os.str();
}

std::string dot_grid(const Instance& inst, const GridCompletion& gc) {
    std::ostringstream os;
    os << "digraph grid {\n  node [shape=ellipse];\n";
    const ObjectRef objs[4][4] = {
        {gc.row1.x, gc.row1.y, gc.row1.z, inst.suspend_obj(gc.row1.x)},
        {gc.row2.x, gc.row2.y, gc.row2.z, inst.suspend_obj(gc.row2.x)},
        {gc.row3.x, gc.row3.y, gc.row3.z, inst.suspend_obj(gc.row3.x)},
        {inst.suspend_obj(gc.row1.x), inst.suspend_obj(gc.row1.y), inst.suspend_obj(gc.row1.z),
         inst.suspend_obj(inst.suspend_obj(gc.row1.x))}};
    auto id = [](int i, int j) { return "n" + std::to_string(i) + std::to_string(j); };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            os << "  " << id(i, j) << " [label=" << quoted(objs[i][j].name()) << "];\n";
    const char* row_labels[4][3] = {{"f", "f'", "f''"},
                                    {"h", "h'", "h''"},
                                    {"j", "j'", "j''"},
                                    {"Σf", "Σf'", "Σf''"}};
    const char* col_labels[3][4] = {{"g", "k", "m", "Σg"},
                                    {"g'", "k'", "m'", "Σg'"},
                                    {"g''", "k''", "m''", "Σg''"}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j)
            os << "  " << id(i, j) << " -> " << id(i, j + 1)
               << " [label=" << quoted(row_labels[i][j]) << "];\n";
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j)
            os << "  " << id(i, j) << " -> " << id(i + 1, j)
               << " [label=" << quoted(col_labels[i][j]) << "];\n";
    // mark the anticommuting corner square
    os << "  anticorner [shape=plaintext, label=\"⊖\"];\n";
    os << "  anticorner -> " << id(2, 2) << " [style=dotted, arrowhead=none];\n";
    os << "  anticorner -> " << id(3, 3) << " [style=dotted, arrowhead=none];\n";
    os << "}\n";
    return os.str();
}

}  // namespace tricat
