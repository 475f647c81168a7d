import java.sql.*;

class SetterMismatch {
    void bind(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement(
            "SELECT label FROM warehouse WHERE qty > ?");
        ps.setString(1, "5");   // wrong type for integer column
        ps.setString(2, "abc"); // invalid parameter index
    }
}
