mod attr_extractor;
mod default_expr;
mod error;
mod field;
mod from_attributes_impl;
mod from_derive_impl;
mod from_field;
mod from_meta_impl;
mod from_type_param;
mod from_variant_impl;
mod outer_from_impl;
mod postfix_transform;
mod trait_impl;
mod variant;
mod variant_data;

pub(in crate::codegen) use self::attr_extractor::ExtractAttribute;
pub use self::default_expr::DefaultExpression;
pub use self::field::Field;
pub use self::from_attributes_impl::FromAttributesImpl;
pub use self::from_derive_impl::FromDeriveInputImpl;
pub use self::from_field::FromFieldImpl;
pub use self::from_meta_impl::FromMetaImpl;
pub use self::from_type_param::FromTypeParamImpl;
pub use self::from_variant_impl::FromVariantImpl;
pub use self::outer_from_impl::OuterFromImpl;
pub use self::postfix_transform::PostfixTransform;
pub use self::trait_impl::TraitImpl;
pub use self::variant::Variant;
pub use self::variant_data::FieldsGen;
