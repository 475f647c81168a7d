import java.sql.*;

class GetterMismatch {
    void read(Connection conn) throws SQLException {
        Statement stmt = conn.createStatement();
        ResultSet rs = stmt.executeQuery(
            "SELECT label, qty FROM warehouse");
        rs.next();
        rs.getInt(1);       // wrong type for VARCHAR column
        rs.getString(3);    // invalid column index
        rs.getString("id"); // invalid column label
    }
}
