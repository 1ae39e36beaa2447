//! Edge boundaries, corner decorations, Lex orders and profiles.

mod boundary;
mod context;
mod limit;
mod order;
mod profile;
mod set;

pub use boundary::{boundary, boundary_parts, cut_edges, decorated_boundary, BoundaryParts};
pub(crate) use boundary::{check_ctx, check_set, raw_boundary};
pub use context::{CornerClass, DecoratedContext};
pub use limit::{
    as_triadic, eta_inverse, format_rational, lambda, lambda_triadic, parse_rational,
    ternary_expansion, Lambda, TernaryExpansion,
};
pub use order::{lex_segment, PermutationOrder};
pub use profile::{
    decorated_lex_profile_table, decorated_order_profile, index_order_profile, lex_profile_direct,
    lex_profile_table, profile_closed_form, profile_closed_form_with, profile_recursive_m3,
    recursive_table_m3, theta0_m3, theta1_m3, ClosedFormConvention, Comparison, EmptySuffix,
    ProfileTable, RecursiveValue, SelfCorner, PROFILE_LIMIT,
};
pub use set::{VertexSet, SET_LIMIT};
