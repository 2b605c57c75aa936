#include "lsvr/visibility.hpp"

namespace lsvr {

BarDrawing tt_bar_visibility(const PlaneStGraph& g, const DualGraph& dual,
                             const std::vector<int>& x,
                             const std::vector<Rat>& y, Rat eps) {
  if (dual.convention() != DualConvention::LeftToRight)
    throw GraphError(GraphErrorKind::SemanticError,
                     "tt_bar_visibility expects the LeftToRight dual");
  if (!(eps > Rat(0)))
    throw GraphError(GraphErrorKind::InvalidNumbering, "eps must be positive");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!(y[ed.tail] < y[ed.head]))
      throw GraphError(GraphErrorKind::InvalidNumbering,
                       "Y does not increase along edge");
    if (!(x[dual.edge(e).tail] < x[dual.edge(e).head]))
      throw GraphError(GraphErrorKind::InvalidNumbering,
                       "X does not increase along dual edge");
  }
  BarDrawing d;
  d.eps = eps;
  d.bars.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int ln = dual.tail_node(g.left_face_of_vertex(v));
    int rn = dual.head_node(g.right_face_of_vertex(v));
    d.bars[v] = Bar{y[v], Rat(x[ln]), Rat(x[rn]) - eps};
  }
  d.segments.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    Rat xs(x[dual.edge(e).tail]);
    d.segments[e] = SegmentRect{e, xs, xs + eps, y[ed.tail], y[ed.head]};
  }
  return d;
}

}  // namespace lsvr
