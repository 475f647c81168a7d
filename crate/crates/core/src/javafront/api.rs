//! The modeled slice of `java.sql`.

use super::ast::JType;
use crate::typemap::JavaAccessor;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApiRole {
    /// Produces a statement (or, for `Statement.executeQuery`, a result set)
    /// from the SQL string in the given argument.
    CreatesSqlStatement(usize),
    /// Produces the result set of the receiver's statement.
    RetrievesSqlResultSet,
    /// Runs the SQL string in the given argument on the receiver.
    ExecutesWithSql(usize),
    Setter(JavaAccessor),
    Getter(JavaAccessor),
    CursorNext,
    Other,
}

pub fn classify_call(recv: &JType, method: &str) -> ApiRole {
    match (recv, method) {
        (JType::Connection, "prepareStatement") => ApiRole::CreatesSqlStatement(0),
        (JType::Statement, "executeQuery") => ApiRole::CreatesSqlStatement(0),
        (JType::Statement, "execute" | "executeUpdate" | "executeLargeUpdate") => ApiRole::ExecutesWithSql(0),
        (JType::PreparedStatement, "executeQuery") => ApiRole::RetrievesSqlResultSet,
        (JType::Statement | JType::PreparedStatement, "getResultSet") => ApiRole::RetrievesSqlResultSet,
        (JType::ResultSet, "next") => ApiRole::CursorNext,
        (JType::PreparedStatement, m) => match m.strip_prefix("set").and_then(JavaAccessor::from_method_suffix) {
            Some(a) => ApiRole::Setter(a),
            None => ApiRole::Other,
        },
        (JType::ResultSet, m) => match m.strip_prefix("get").and_then(JavaAccessor::from_method_suffix) {
            Some(a) => ApiRole::Getter(a),
            None => ApiRole::Other,
        },
        _ => ApiRole::Other,
    }
}

/// Static result type of a call on a modeled receiver, if the API fixes it.
pub fn api_result_type(recv: &JType, method: &str) -> Option<JType> {
    let ty = match (recv, method) {
        (JType::Connection, "prepareStatement") => JType::PreparedStatement,
        (JType::Connection, "createStatement") => JType::Statement,
        (JType::Statement | JType::PreparedStatement, "executeQuery" | "getResultSet") => JType::ResultSet,
        (JType::Statement | JType::PreparedStatement, "execute") => JType::Boolean,
        (JType::Statement | JType::PreparedStatement, "executeUpdate") => JType::Int,
        (JType::Statement | JType::PreparedStatement, "executeLargeUpdate") => JType::Long,
        (JType::Statement | JType::PreparedStatement, "getConnection") => JType::Connection,
        (JType::ResultSet, "next" | "wasNull" | "previous" | "first" | "last") => JType::Boolean,
        (JType::ResultSet, "getStatement") => JType::Statement,
        (JType::ResultSet, m) => match m.strip_prefix("get").and_then(JavaAccessor::from_method_suffix)? {
            JavaAccessor::Byte | JavaAccessor::Short | JavaAccessor::Int => JType::Int,
            JavaAccessor::Long => JType::Long,
            JavaAccessor::Float | JavaAccessor::Double => JType::Double,
            JavaAccessor::Boolean => JType::Boolean,
            JavaAccessor::String => JType::String,
            other => JType::Other(other.java_name().to_string()),
        },
        (JType::PreparedStatement, m) if m.starts_with("set") => JType::Void,
        _ => return None,
    };
    Some(ty)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        assert_eq!(classify_call(&JType::Connection, "prepareStatement"), ApiRole::CreatesSqlStatement(0));
        assert_eq!(classify_call(&JType::PreparedStatement, "executeQuery"), ApiRole::RetrievesSqlResultSet);
        assert_eq!(classify_call(&JType::ResultSet, "getClass"), ApiRole::Other);
        assert_eq!(classify_call(&JType::ResultSet, "getInt"), ApiRole::Getter(JavaAccessor::Int));
        assert_eq!(classify_call(&JType::PreparedStatement, "setBigDecimal"), ApiRole::Setter(JavaAccessor::BigDecimal));
        assert_eq!(classify_call(&JType::Statement, "execute"), ApiRole::ExecutesWithSql(0));
        assert_eq!(classify_call(&JType::Other("Foo".into()), "getInt"), ApiRole::Other);
        assert_eq!(classify_call(&JType::PreparedStatement, "setObject"), ApiRole::Other);
    }
}
