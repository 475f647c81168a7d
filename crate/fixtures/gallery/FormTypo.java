import java.sql.*;

class FormTypo {
    void scan(Connection conn) throws SQLException {
        Statement stmt = conn.createStatement();
        stmt.executeQuery("SELECT * FORM warehouse"); // Typo
    }
}
